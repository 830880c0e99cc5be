"""Reed-Solomon deep holes: field arithmetic, DFT, exact error distance."""

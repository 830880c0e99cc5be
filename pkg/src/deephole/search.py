"""Exhaustive enumeration of linear codes over a field.

A message index ``i`` in ``range(q**k)`` stands for the coefficient
vector ``(c_0, ..., c_{k-1})`` of its base-q digits, least significant
first.  ``span_block`` materialises the codewords ``sum c_j * basis[j]``
for a contiguous index range with vectorised table lookups.

``nearest`` scans the whole message space in fixed-size chunks spread
over a thread pool.  Each chunk reports, per received word, its smallest
distance and the first index attaining it; chunks are merged by the
lexicographic minimum of (distance, index), so the result does not
depend on the number of workers.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from .errors import SearchSpaceTooLarge
from .gf import GF

SEARCH_CAP = 10 ** 8
CHUNK = 1 << 15
# bound on received-words x codewords x length bytes touched at once
_BLOCK_BYTES = 1 << 24


def check_cap(q: int, k: int, force: bool = False, cap: int = SEARCH_CAP) -> int:
    size = q ** k
    if size > cap and not force:
        raise SearchSpaceTooLarge(f"{q}^{k} = {size} candidates exceeds the cap {cap}; pass force=True")
    return size


def span_block(field: GF, basis: np.ndarray, start: int, stop: int) -> np.ndarray:
    """Codewords for message indices ``start .. stop-1`` as a (stop-start, n) array."""
    q = field.q
    k, n = basis.shape
    add, mul = field.add_table, field.mul_table
    idx = np.arange(start, stop, dtype=np.int64)
    acc = np.zeros((len(idx), n), dtype=field.dtype)
    for j in range(k):
        digit = (idx // q ** j) % q
        if not digit.any():
            continue
        acc = add[acc, mul[digit[:, None], basis[j][None, :]]]
    return acc


def message_digits(q: int, k: int, index: int) -> list[int]:
    out = []
    for _ in range(k):
        index, r = divmod(index, q)
        out.append(r)
    return out


def _chunk_nearest(field, basis, words, start, stop):
    block = span_block(field, basis, start, stop)
    rows = max(1, _BLOCK_BYTES // max(1, block.size))
    best_d = np.empty(len(words), dtype=np.int64)
    best_i = np.empty(len(words), dtype=np.int64)
    for w0 in range(0, len(words), rows):
        w = words[w0:w0 + rows]
        dist = np.count_nonzero(block[None, :, :] != w[:, None, :], axis=2)
        arg = dist.argmin(axis=1)
        best_d[w0:w0 + rows] = dist[np.arange(len(w)), arg]
        best_i[w0:w0 + rows] = arg + start
    return best_d, best_i


def nearest(field: GF, basis: np.ndarray, words: np.ndarray, workers: int = 1,
            force: bool = False, chunk: int = CHUNK) -> tuple[np.ndarray, np.ndarray]:
    """Distance from each row of ``words`` to the span of ``basis``.

    Returns ``(distance, index)`` arrays; ``index`` is the smallest message
    index of a nearest codeword.
    """
    k = basis.shape[0]
    total = check_cap(field.q, k, force)
    words = np.asarray(words, dtype=field.dtype).reshape(-1, basis.shape[1])
    ranges = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]

    def run(r):
        return _chunk_nearest(field, basis, words, *r)

    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, ranges))
    else:
        parts = [run(r) for r in ranges]

    best_d, best_i = parts[0]
    best_d, best_i = best_d.copy(), best_i.copy()
    for d, i in parts[1:]:
        better = (d < best_d) | ((d == best_d) & (i < best_i))
        best_d = np.where(better, d, best_d)
        best_i = np.where(better, i, best_i)
    return best_d, best_i


def map_words(fn, words: np.ndarray, workers: int = 1, chunk: int = 256):
    """Apply ``fn`` to row blocks of ``words`` in parallel; concatenates results in order."""
    ranges = [(s, min(s + chunk, len(words))) for s in range(0, len(words), chunk)]
    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda r: fn(words[r[0]:r[1]]), ranges))
    else:
        parts = [fn(words[a:b]) for a, b in ranges]
    return parts


def min_weight(field: GF, basis: np.ndarray, workers: int = 1, force: bool = False,
               chunk: int = CHUNK) -> tuple[int, int]:
    """Minimum weight of a nonzero codeword and the smallest index attaining it."""
    total = check_cap(field.q, basis.shape[0], force)
    ranges = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]

    def run(r):
        block = span_block(field, basis, *r)
        w = np.count_nonzero(block, axis=1)
        if r[0] == 0:
            w[0] = basis.shape[1] + 1
        i = int(w.argmin())
        return int(w[i]), i + r[0]

    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, ranges))
    else:
        parts = [run(r) for r in ranges]
    return min(parts)


def nearest_reference(field: GF, basis: Sequence[Sequence[int]], word: Sequence[int]) -> tuple[int, int]:
    """Pure-Python scan with early exit; independent of the table path above.

    Abandons a candidate as soon as its running mismatch count reaches the
    best distance found so far.
    """
    k = len(basis)
    n = len(word)
    best, best_i = n + 1, -1
    add, mul = field.add, field.mul
    # itertools.product varies the last coordinate fastest; reverse so c_0 does
    for index, rev in enumerate(itertools.product(range(field.q), repeat=k)):
        msg = rev[::-1]
        miss = 0
        for pos in range(n):
            v = 0
            for j in range(k):
                if msg[j]:
                    v = add(v, mul(msg[j], basis[j][pos]))
            if v != word[pos]:
                miss += 1
                if miss >= best:
                    break
        else:
            if miss < best:
                best, best_i = miss, index
    return best, best_i

"""Standard Reed-Solomon codes over GF(q)* in evaluation and cyclic form.

Both versions share (q, k, alpha).  The evaluation code is
``{(f(1), f(alpha), ..., f(alpha^(q-2))) : deg f <= k-1}``; the cyclic code
is ``{m(x) g(x) : deg m <= k-1}`` with ``g = (x-alpha)...(x-alpha^(d-1))``
and ``d = q - k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import search
from .errors import HypothesisViolated, LengthMismatch, MessageDegreeTooHigh
from .gf import GF
from .poly import Poly, Word, eval_word, lagrange_interpolate, product_of_linear_factors


def _check_k(field: GF, k: int):
    if not 2 <= k <= field.q - 2:
        raise HypothesisViolated(f"need 2 <= k <= q-2 = {field.q - 2}, got k = {k}")


@dataclass(frozen=True)
class RSCode:
    """Evaluation (polynomial) version of the standard RS code."""

    field: GF
    k: int
    version = "eval"

    def __post_init__(self):
        _check_k(self.field, self.k)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return self.field.q - 1

    @property
    def alpha(self) -> int:
        return self.field.alpha

    @property
    def d(self) -> int:
        return self.field.q - self.k

    @property
    def covering_radius(self) -> int:
        return self.n - self.k

    def evaluation_points(self) -> list[int]:
        return self.field.alpha_powers()

    @cached_property
    def basis(self) -> np.ndarray:
        """Row j is the evaluation word of x^j."""
        f = self.field
        return np.array([[f.pow(x, j) for x in f.alpha_powers()] for j in range(self.k)],
                        dtype=f.dtype)

    def codeword(self, index: int) -> Word:
        return encode_eval(self, Poly(self.field, search.message_digits(self.q, self.k, index)))

    def cyclic(self) -> CyclicRSCode:
        return CyclicRSCode(self.field, self.k)

    def descriptor(self) -> dict:
        return {"q": self.q, "k": self.k, "alpha": self.alpha, "version": self.version,
                "field": self.field.descriptor}


@dataclass(frozen=True)
class CyclicRSCode:
    """Cyclic version: multiples m(x) g(x) with deg m <= k-1."""

    field: GF
    k: int
    version = "cyclic"

    def __post_init__(self):
        _check_k(self.field, self.k)

    q = RSCode.q
    n = RSCode.n
    alpha = RSCode.alpha
    d = RSCode.d
    covering_radius = RSCode.covering_radius

    @cached_property
    def g(self) -> Poly:
        f = self.field
        return product_of_linear_factors(f, [f.exp(i) for i in range(1, self.d)])

    @cached_property
    def g1(self) -> Poly:
        """g with the root alpha removed."""
        f = self.field
        return product_of_linear_factors(f, [f.exp(i) for i in range(2, self.d)])

    @cached_property
    def g2(self) -> Poly:
        """g with the root alpha^(d-1) removed."""
        f = self.field
        return product_of_linear_factors(f, [f.exp(i) for i in range(1, self.d - 1)])

    @cached_property
    def basis(self) -> np.ndarray:
        """Row j is the coefficient vector of x^j g(x), length n."""
        g = self.g.padded(self.n - self.k + 1)
        rows = np.zeros((self.k, self.n), dtype=self.field.dtype)
        for j in range(self.k):
            rows[j, j:j + len(g)] = g
        return rows

    def codeword(self, index: int) -> Poly:
        return encode_cyclic(self, Poly(self.field, search.message_digits(self.q, self.k, index)))

    def evaluation(self) -> RSCode:
        return RSCode(self.field, self.k)

    def descriptor(self) -> dict:
        return {"q": self.q, "k": self.k, "alpha": self.alpha, "version": self.version,
                "field": self.field.descriptor}


def _check_message(code, m: Poly):
    if m.field != code.field:
        raise ValueError("message over a different field")
    if m.degree > code.k - 1:
        raise MessageDegreeTooHigh(f"message degree {m.degree} > k - 1 = {code.k - 1}")


def encode_eval(code: RSCode, message: Poly) -> Word:
    _check_message(code, message)
    return eval_word(message)


def encode_cyclic(code: CyclicRSCode, m: Poly) -> Poly:
    _check_message(code, m)
    return m * code.g


def is_codeword(code: RSCode | CyclicRSCode, candidate: Word | Poly) -> bool:
    if isinstance(code, CyclicRSCode):
        if isinstance(candidate, Word):
            candidate = Poly(code.field, candidate.entries)
        if candidate.degree > code.n - 1:
            raise LengthMismatch(f"degree {candidate.degree} exceeds q - 2")
        return (candidate % code.g).is_zero()
    if not isinstance(candidate, Word):
        raise TypeError("evaluation code membership needs a Word")
    if len(candidate) != code.n:
        raise LengthMismatch(f"length {len(candidate)} != {code.n}")
    return lagrange_interpolate(candidate).degree <= code.k - 1


def minimum_distance(code: RSCode | CyclicRSCode, method: str = "formula",
                     workers: int = 1, force: bool = False) -> int:
    if method == "formula":
        return code.n - code.k + 1
    if method == "exhaustive":
        return search.min_weight(code.field, code.basis, workers=workers, force=force)[0]
    raise ValueError(f"unknown method {method!r}")


def bch_designed_distance_check(c: Poly, l: int, delta: int, alpha: int | None = None) -> bool:
    """True iff c vanishes at alpha^l, ..., alpha^(l+delta-2)."""
    f = c.field
    if c.degree > f.q - 2:
        raise ValueError(f"degree {c.degree} exceeds q - 2")
    if alpha is None:
        alpha = f.alpha
    return all(c(f.pow(alpha, l + i)) == 0 for i in range(delta - 1))


def multiples_basis(code: CyclicRSCode, h: Poly) -> np.ndarray:
    """Rows x^j h(x) for every shift keeping the degree <= q-2."""
    hc = h.coeffs
    n = code.n
    rows = np.zeros((n - len(hc) + 1, n), dtype=code.field.dtype)
    for j in range(rows.shape[0]):
        rows[j, j:j + len(hc)] = hc
    return rows

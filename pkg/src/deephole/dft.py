"""Length-(q-1) discrete Fourier transform over GF(q).

``dft(V)[j] = sum_i V[i] * alpha^(i*j)`` and the inverse carries the factor
1/(q-1), which equals -1 in any field of order q, so it is applied as a
negation.  Transforms are the naive O(n^2) sums.

The remaining functions relate the evaluation and cyclic versions of the
standard RS code through this transform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import DegreeTooHigh, InexactDivision, LengthMismatch, NotDeepHoleShape
from .gf import GF
from .poly import Poly, Word, eval_word, hamming_distance, weight
from .rscode import CyclicRSCode


def _transform(field: GF, v, sign: int) -> list[int]:
    n = field.q - 1
    if len(v) != n:
        raise LengthMismatch(f"length {len(v)} != q - 1 = {n}")
    pts = field.alpha_powers()
    add, mul = field.add, field.mul
    out = []
    for j in range(n):
        acc = 0
        for i, x in enumerate(v):
            if x:
                acc = add(acc, mul(x, pts[(sign * i * j) % n]))
        out.append(acc)
    return out


def dft(V: Word) -> Word:
    return Word(V.field, _transform(V.field, V.entries, 1))


def idft(Vhat: Word) -> Word:
    f = Vhat.field
    return Word(f, [f.neg(x) for x in _transform(f, Vhat.entries, -1)])


def _coeff_vector(V: Poly) -> list[int]:
    n = V.field.q - 1
    if V.degree > n - 1:
        raise DegreeTooHigh(f"degree {V.degree} exceeds q - 2 = {n - 1}")
    return V.padded(n)


def dft_poly(V: Poly) -> Poly:
    """Coefficients of the result are V(alpha^j)."""
    return Poly(V.field, _transform(V.field, _coeff_vector(V), 1))


def idft_poly(Vhat: Poly) -> Poly:
    f = Vhat.field
    return Poly(f, [f.neg(x) for x in _transform(f, _coeff_vector(Vhat), -1)])


@dataclass(frozen=True)
class TransformPair:
    time: Word
    freq: Word

    @classmethod
    def from_time(cls, V: Word) -> TransformPair:
        return cls(V, dft(V))

    @classmethod
    def from_freq(cls, Vhat: Word) -> TransformPair:
        return cls(idft(Vhat), Vhat)

    @property
    def alpha(self) -> int:
        return self.time.field.alpha


def _exact_quotient(a: Poly, b: Poly) -> Poly:
    quot, rem = divmod(a, b)
    if not rem.is_zero():
        raise InexactDivision(f"{a} is not divisible by {b}")
    return quot


def poly_to_cyclic(code: CyclicRSCode, s: Poly) -> Poly:
    """l with l * g equal to the transform of s (deg s <= k-1)."""
    if s.degree > code.k - 1:
        raise DegreeTooHigh(f"degree {s.degree} > k - 1")
    return _exact_quotient(dft_poly(s), code.g)


def cyclic_to_poly(code: CyclicRSCode, l: Poly) -> Poly:
    """Inverse transform of l * g; its degree is at most k-1."""
    if l.degree > code.k - 1:
        raise DegreeTooHigh(f"degree {l.degree} > k - 1")
    s = idft_poly(l * code.g)
    if s.degree > code.k - 1:
        raise InexactDivision(f"inverse transform {s} has degree above k - 1")
    return s


def deep_hole_shape(code, u: Poly) -> Literal["high", "k"] | None:
    """Which monomial family the interpolant u belongs to, if any.

    ``"high"``: u = a x^(q-2) + f; ``"k"``: u = a x^k + f; deg f <= k-1, a != 0.
    The two coincide when k = q - 2 and ``"high"`` is reported.
    """
    top = code.q - 2
    k = code.k
    if u.degree > top:
        return None
    if u[top] and all(u[i] == 0 for i in range(k, top)):
        return "high"
    if u[k] and all(u[i] == 0 for i in range(k + 1, top + 1)):
        return "k"
    return None


def deep_hole_image(code: CyclicRSCode, u: Poly) -> tuple[int, Poly, Literal["g1", "g2"]]:
    """(a, l, which) with a * g_which + l * g equal to the transform of u.

    Built as follows: V = idft(g_which) has exactly one nonzero coefficient
    of degree >= k (at q-2 for g1, at k for g2), call it V_top.  Let l1, l2
    be the cyclic images of the low parts of V and u.  Then a = u_top / V_top
    and l = l2 - a * l1.
    """
    f = code.field
    shape = deep_hole_shape(code, u)
    if shape is None:
        raise NotDeepHoleShape(f"{u} is neither a*x^(q-2) + f nor a*x^k + f")
    if shape == "high":
        which, top, center = "g1", code.q - 2, code.g1
    else:
        which, top, center = "g2", code.k, code.g2
    V = idft_poly(center)
    for i in range(code.k, code.q - 1):
        if i != top and V[i]:
            raise InexactDivision(f"inverse transform of {which} has a stray term at x^{i}")
    if not V[top]:
        raise InexactDivision(f"inverse transform of {which} vanishes at x^{top}")
    low = code.k
    l1 = poly_to_cyclic(code, Poly(f, V.coeffs[:low]))
    l2 = poly_to_cyclic(code, Poly(f, u.coeffs[:low]))
    a = f.div(u[top], V[top])
    return a, l2 - l1.scale(a), which


def distance_preservation_check(s: Poly, t: Poly) -> tuple[int, int]:
    """(distance of the evaluation words, weight of the transform difference)."""
    lhs = hamming_distance(eval_word(s), eval_word(t))
    rhs = weight(dft_poly(s) - dft_poly(t))
    return lhs, rhs

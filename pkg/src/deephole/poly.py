"""Dense polynomials and length-(q-1) words over a finite field.

Coefficients and entries are stored as canonical integer encodings of
the field (see :mod:`deephole.gf`).  A :class:`Word` is indexed by the
exponent of the evaluation point: entry ``i`` is the value at ``alpha**i``.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import DegreeTooHigh, DivisionByZeroPoly, LengthMismatch, MixedFields
from .gf import GF, FieldElement

# degree of the zero polynomial; compares below every integer
NEG_INF = -math.inf


def _value(field: GF, c) -> int:
    if isinstance(c, FieldElement):
        if c.field != field:
            raise MixedFields(f"{c.field} vs {field}")
        return c.value
    c = int(c)
    if not 0 <= c < field.q:
        raise ValueError(f"{c} is not an element of {field}")
    return c


def _same_field(a, b) -> GF:
    if a.field != b.field:
        raise MixedFields(f"{a.field} vs {b.field}")
    return a.field


class Poly:
    """Polynomial over ``field``; ``coeffs[i]`` is the coefficient of x^i."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Iterable = ()):
        cs = [_value(field, c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def _raw(cls, field: GF, cs: list[int]) -> Poly:
        while cs and cs[-1] == 0:
            cs.pop()
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def zero(cls, field: GF) -> Poly:
        return cls._raw(field, [])

    @classmethod
    def constant(cls, field: GF, c) -> Poly:
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: GF, degree: int, coeff=1) -> Poly:
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def parse(cls, field: GF, text: str) -> Poly:
        """Parse ``"c0 + c1*x + c2*x^2"``; also accepts ``4x^8``, ``-x^7``."""
        s = text.replace(" ", "").replace("**", "^")
        if s in ("", "0"):
            return cls.zero(field)
        if s[0] not in "+-":
            s = "+" + s
        cs: dict[int, int] = {}
        pos = 0
        term = re.compile(r"([+-])(\d*)\*?(x(?:\^(\d+))?)?")
        while pos < len(s):
            mt = term.match(s, pos)
            if not mt or mt.end() == pos or (not mt.group(2) and not mt.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign, num, xpart, exp = mt.groups()
            c = int(num) if num else 1
            e = (int(exp) if exp else 1) if xpart else 0
            v = c % field.p if field.m == 1 else _value(field, c)
            if sign == "-":
                v = field.neg(v)
            cs[e] = field.add(cs.get(e, 0), v)
            pos = mt.end()
        top = max(cs)
        return cls._raw(field, [cs.get(i, 0) for i in range(top + 1)])

    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length: int) -> list[int]:
        if len(self.coeffs) > length:
            raise DegreeTooHigh(f"degree {self.degree} does not fit in {length} coefficients")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other: Poly) -> Poly:
        f = _same_field(self, other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly._raw(f, out)

    def __neg__(self) -> Poly:
        return Poly._raw(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def scale(self, c) -> Poly:
        f = self.field
        c = _value(f, c)
        return Poly._raw(f, [f.mul(c, x) for x in self.coeffs])

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(other)
        f = _same_field(self, other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        add, mul = f.add, f.mul
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] = add(out[i + j], mul(x, y))
        return Poly._raw(f, out)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        f = _same_field(self, other)
        if not other.coeffs:
            raise DivisionByZeroPoly("division by the zero polynomial")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return Poly.zero(f), Poly._raw(f, rem)
        quot = [0] * (len(rem) - db)
        lead_inv = f.inv(other.coeffs[-1])
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = f.mul(rem[shift + db], lead_inv)
            quot[shift] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] = f.sub(rem[shift + j], f.mul(c, b))
        return Poly._raw(f, quot), Poly._raw(f, rem[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __call__(self, x) -> int:
        """Horner evaluation at a field element (given as encoding or FieldElement)."""
        f = self.field
        x = _value(f, x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*x" if i == 1 else f"{c}*x^{i}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Poly({self.field.descriptor}, {self})"


class Word:
    """A vector of length q - 1 over ``field``."""

    __slots__ = ("field", "entries")

    def __init__(self, field: GF, entries: Iterable):
        es = tuple(_value(field, e) for e in entries)
        if len(es) != field.q - 1:
            raise LengthMismatch(f"word has length {len(es)}, expected {field.q - 1}")
        self.field = field
        self.entries: tuple[int, ...] = es

    @classmethod
    def zero(cls, field: GF) -> Word:
        return cls(field, [0] * (field.q - 1))

    @classmethod
    def parse(cls, field: GF, text: str) -> Word:
        """Parse ``"(8,8,7)"`` or ``"8,8,7"``."""
        s = text.strip().strip("()[]")
        return cls(field, [int(t) for t in s.split(",") if t.strip()])

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def __add__(self, other: Word) -> Word:
        f = _same_field(self, other)
        return Word(f, [f.add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: Word) -> Word:
        f = _same_field(self, other)
        return Word(f, [f.sub(a, b) for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> Word:
        return Word(self.field, [self.field.neg(a) for a in self.entries])

    def scale(self, c) -> Word:
        f = self.field
        c = _value(f, c)
        return Word(f, [f.mul(c, a) for a in self.entries])

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"

    def __repr__(self):
        return f"Word({self.field.descriptor}, {self})"


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_sub(a: Poly, b: Poly) -> Poly:
    return a - b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return divmod(a, b)


def product_of_linear_factors(field: GF, roots: Iterable) -> Poly:
    """Monic polynomial prod (x - r) over the given roots."""
    out = Poly._raw(field, [1])
    for r in roots:
        out = out * Poly._raw(field, [field.neg(_value(field, r)), 1])
    return out


def evaluate(f: Poly, x) -> int:
    return f(x)


def eval_word(f: Poly, alpha: int | None = None) -> Word:
    """Evaluate ``f`` at alpha^0, ..., alpha^(q-2)."""
    field = f.field
    if f.degree > field.q - 2:
        raise DegreeTooHigh(f"degree {f.degree} exceeds q - 2 = {field.q - 2}")
    return Word(field, [f(x) for x in _points(field, alpha)])


def _points(field: GF, alpha: int | None) -> list[int]:
    if alpha is None or alpha == field.alpha:
        return field.alpha_powers()
    alpha = _value(field, alpha)
    pts, x = [], 1
    for _ in range(field.q - 1):
        pts.append(x)
        x = field.mul(x, alpha)
    return pts


def lagrange_interpolate(w: Word, alpha: int | None = None) -> Poly:
    """The unique polynomial of degree <= q-2 taking value w[i] at alpha^i.

    With the evaluation points ordered as alpha powers this is an inverse
    transform: coefficient i is -(sum_j w[j] * alpha^(-i*j)), the factor
    1/(q-1) being -1 in characteristic p.
    """
    field = w.field
    pts = _points(field, alpha)
    n = field.q - 1
    add, mul = field.add, field.mul
    out = []
    for i in range(n):
        acc = 0
        for j, wj in enumerate(w.entries):
            if wj:
                acc = add(acc, mul(wj, pts[(-i * j) % n]))
        out.append(field.neg(acc))
    return Poly._raw(field, out)


def newton_interpolate(field: GF, xs: Sequence, ys: Sequence) -> Poly:
    """Interpolate through arbitrary distinct points by divided differences."""
    xs = [_value(field, x) for x in xs]
    ys = [_value(field, y) for y in ys]
    if len(xs) != len(ys):
        raise LengthMismatch(f"{len(xs)} points but {len(ys)} values")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must be distinct")
    coef = list(ys)
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = field.sub(coef[i], coef[i - 1])
            coef[i] = field.div(num, field.sub(xs[i], xs[i - j]))
    out = Poly.zero(field)
    for i in range(n - 1, -1, -1):
        out = out * Poly._raw(field, [field.neg(xs[i]), 1]) + Poly._raw(field, [coef[i]])
    return out


def degree_of_word(w: Word, alpha: int | None = None):
    return lagrange_interpolate(w, alpha).degree


def weight(x: Word | Poly) -> int:
    """Nonzero entries of a word, or nonzero coefficients of a polynomial."""
    items = x.coeffs if isinstance(x, Poly) else x.entries
    return sum(1 for c in items if c)


def hamming_distance(a: Word | Poly, b: Word | Poly) -> int:
    if type(a) is not type(b):
        raise TypeError("hamming_distance needs two words or two polynomials")
    _same_field(a, b)
    if isinstance(a, Poly):
        n = max(len(a.coeffs), len(b.coeffs))
        return sum(1 for i in range(n) if a[i] != b[i])
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)} differ")
    return sum(1 for x, y in zip(a.entries, b.entries) if x != y)

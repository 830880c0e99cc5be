"""Small finite fields GF(p^m) with log/antilog table arithmetic.

Elements are encoded as integers in [0, q-1]: the base-p digits of the
integer are the polynomial-basis coordinates of the element, least
significant digit first.  For prime fields this is just the residue.

The hot paths (polynomial arithmetic, exhaustive searches) work directly
on these integer encodings through the methods of :class:`GF`.
:class:`FieldElement` is a thin typed wrapper for interactive use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldTooLarge,
    MixedFields,
    NotPrime,
    ReducibleModulus,
)

MAX_ORDER = 1 << 16
# dense q x q numpy tables are only built up to this order
TABLE_ORDER = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def split_prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise NotPrime."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, m


# -- polynomials over GF(p) as coefficient lists, low degree first -----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _prem(a: list[int], f: Sequence[int], p: int) -> list[int]:
    """a mod f over GF(p); f monic."""
    a = _trim([c % p for c in a])
    df = len(f) - 1
    while len(a) - 1 >= df:
        lead = a[-1]
        shift = len(a) - 1 - df
        for i, c in enumerate(f):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _prem(out, f, p)


def _ppowmod(a: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _prem(list(a), f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _peval_at(c: Sequence[int], h: list[int], f: Sequence[int], p: int) -> list[int]:
    """c(h) mod f by Horner."""
    acc: list[int] = []
    for coef in reversed(c):
        acc = _pmulmod(acc, h, f, p)
        if acc:
            acc[0] = (acc[0] + coef) % p
        else:
            acc = [coef % p]
        _trim(acc)
    return acc


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    m = len(f) - 1
    if m <= 1:
        return m == 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _prem(list(f), list(low) + [1], p):
                return False
    return True


def _x_is_primitive(f: Sequence[int], p: int) -> bool:
    """True iff x has multiplicative order p^m - 1 modulo f.

    This also certifies f irreducible: a reducible modulus leaves fewer than
    p^m - 1 units in GF(p)[x]/(f).
    """
    order = p ** (len(f) - 1) - 1
    if _ppowmod([0, 1], order, f, p) != [1]:
        return False
    return all(_ppowmod([0, 1], order // r, f, p) != [1] for r in prime_factors(order))


@lru_cache(maxsize=None)
def conway_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Conway polynomial of GF(p^m), coefficients low degree first.

    Candidates are scanned in Conway's order (coefficient of x^(m-i) read as
    (-1)^i * c, compared lexicographically from x^(m-1) down); the first
    primitive one compatible with every Conway polynomial of a proper
    divisor degree is returned.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    q = p ** m
    divisors = [d for d in range(1, m) if m % d == 0]
    for key in itertools.product(range(p), repeat=m):
        f = [0] * (m + 1)
        f[m] = 1
        for i, kv in enumerate(key, start=1):
            f[m - i] = (kv if i % 2 == 0 else -kv) % p
        if f[0] == 0 or not _x_is_primitive(f, p):
            continue
        ok = True
        for d in divisors:
            h = _ppowmod([0, 1], (q - 1) // (p ** d - 1), f, p)
            if _peval_at(conway_polynomial(p, d), h, f, p):
                ok = False
                break
        if ok:
            return tuple(f)
    raise AssertionError(f"no Conway polynomial found for {p}^{m}")  # unreachable


class GF:
    """The finite field GF(p^m) with log/antilog tables.

    All arithmetic methods take and return canonical integer encodings.
    The primitive element ``alpha`` is the smallest encoding of
    multiplicative order q - 1.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
        q = p ** m
        if q > MAX_ORDER:
            raise FieldTooLarge(f"q = {q} exceeds the table cap {MAX_ORDER}")
        self.p, self.m, self.q = p, m, q

        if m == 1:
            self.modulus = None
            self._default_modulus = True
        else:
            default = conway_polynomial(p, m)
            if modulus is None:
                modulus = default
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) - 1 != m:
                raise DegreeMismatch(f"modulus has degree {len(modulus) - 1}, expected {m}")
            if modulus[-1] != 1:
                raise DegreeMismatch("modulus must be monic")
            if not _is_irreducible(modulus, p):
                raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
            self.modulus = modulus
            self._default_modulus = modulus == default

        self._weights = [p ** i for i in range(m)]
        self.alpha = self._find_primitive()
        n = q - 1
        exp = [0] * (2 * n)
        log: list[int | None] = [None] * q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, self.alpha)
        exp[n:] = exp[:n]
        self._exp = exp
        self._log = log

        if p == 2:
            self._neg = list(range(q))
        else:
            self._neg = [self._encode([(-c) % p for c in self._decode(v)]) for v in range(q)]
        self._add = self.add_table.tolist() if m > 1 and p != 2 and q <= TABLE_ORDER else None

    # -- encoding -----------------------------------------------------------

    def _decode(self, v: int) -> list[int]:
        out = []
        for _ in range(self.m):
            v, r = divmod(v, self.p)
            out.append(r)
        return out

    def _encode(self, digits: Sequence[int]) -> int:
        return sum(d * w for d, w in zip(digits, self._weights))

    def _slow_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        return self._encode(_pmulmod(self._decode(a), self._decode(b), self.modulus, self.p))

    def _find_primitive(self) -> int:
        n = self.q - 1
        factors = prime_factors(n)

        def slow_pow(a, e):
            r = 1
            while e:
                if e & 1:
                    r = self._slow_mul(r, a)
                a = self._slow_mul(a, a)
                e >>= 1
            return r

        for a in range(1, self.q):
            if all(slow_pow(a, n // r) != 1 for r in factors):
                return a
        raise AssertionError("field has no primitive element")  # unreachable

    # -- identity -----------------------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and (self is other or self.key == other.key)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GF({self.descriptor})"

    @property
    def descriptor(self) -> str:
        """``"p^m"``, or ``"p^m/c0,c1,...,cm"`` for a non-default modulus."""
        base = f"{self.p}^{self.m}"
        if self._default_modulus:
            return base
        return base + "/" + ",".join(map(str, self.modulus))

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    # -- scalar arithmetic on encodings ---------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        return self._encode([(x + y) % self.p for x, y in zip(self._decode(a), self._decode(b))])

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return self._exp[self.q - 1 - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise DivisionByZero("zero to a negative power")
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete log to base alpha."""
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log[a]

    def exp(self, i: int) -> int:
        """alpha ** i for any integer i."""
        return self._exp[i % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    def alpha_powers(self) -> list[int]:
        """alpha^0, alpha^1, ..., alpha^(q-2)."""
        return self._exp[: self.q - 1]

    # -- vectorised tables ---------------------------------------------------

    @cached_property
    def dtype(self):
        return np.uint8 if self.q <= 256 else np.uint16

    @cached_property
    def add_table(self) -> np.ndarray:
        if self.q > TABLE_ORDER:
            raise FieldTooLarge(f"no dense table for q = {self.q}")
        v = np.arange(self.q)
        if self.p == 2:
            return (v[:, None] ^ v[None, :]).astype(self.dtype)
        digits = np.stack([(v // w) % self.p for w in self._weights], axis=-1)
        s = (digits[:, None, :] + digits[None, :, :]) % self.p
        return (s @ np.array(self._weights)).astype(self.dtype)

    @cached_property
    def mul_table(self) -> np.ndarray:
        if self.q > TABLE_ORDER:
            raise FieldTooLarge(f"no dense table for q = {self.q}")
        exp = np.array(self._exp, dtype=np.int64)
        log = np.array([0 if x is None else x for x in self._log], dtype=np.int64)
        t = exp[log[:, None] + log[None, :]]
        t[0, :] = 0
        t[:, 0] = 0
        return t.astype(self.dtype)


@dataclass(frozen=True, eq=False, slots=True)
class FieldElement:
    field: GF
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"{self.value} is not an element of {self.field}")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return FieldElement(self.field, other).value
        return NotImplemented

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(FieldElement(self.field, other), self)

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return mul(self, inv(FieldElement(self.field, self._other(other))))

    def __neg__(self):
        return neg(self)

    def __pow__(self, e: int):
        return power(self, e)

    def inverse(self) -> FieldElement:
        return inv(self)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


@dataclass(frozen=True)
class PrimitiveElement:
    alpha: FieldElement

    @property
    def order(self) -> int:
        return self.alpha.field.q - 1


@lru_cache(maxsize=None)
def _build(p: int, m: int, modulus: tuple | None) -> GF:
    return GF(p, m, modulus)


def build_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> GF:
    """Construct (and memoise) GF(p^m)."""
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    if m == 1:
        modulus = None
    field = _build(p, m, None)
    if modulus is None or modulus == field.modulus:
        return field
    return _build(p, m, modulus)


def field_of_order(q: int, modulus: Sequence[int] | None = None) -> GF:
    p, m = split_prime_power(q)
    return build_field(p, m, modulus)


def primitive_element(field: GF) -> PrimitiveElement:
    return PrimitiveElement(FieldElement(field, field.alpha))


def _pair(a: FieldElement, b) -> tuple[GF, int, int]:
    if not isinstance(a, FieldElement):
        raise TypeError(f"expected FieldElement, got {type(a).__name__}")
    bv = a._other(b)
    if bv is NotImplemented:
        raise TypeError(f"unsupported operand {b!r}")
    return a.field, a.value, bv


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    f, x, y = _pair(a, b)
    return FieldElement(f, f.add(x, y))


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    f, x, y = _pair(a, b)
    return FieldElement(f, f.sub(x, y))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    f, x, y = _pair(a, b)
    return FieldElement(f, f.mul(x, y))


def neg(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.neg(a.value))


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.inv(a.value))


def power(a: FieldElement, e: int) -> FieldElement:
    return FieldElement(a.field, a.field.pow(a.value, e))


def elements(field: GF) -> Iterator[FieldElement]:
    return (FieldElement(field, v) for v in field.elements())


def nonzero_elements_in_alpha_order(field: GF) -> Iterator[FieldElement]:
    return (FieldElement(field, v) for v in field.alpha_powers())

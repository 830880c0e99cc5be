import itertools
import random

import pytest

from deephole.dft import (
    _transform,
    TransformPair,
    cyclic_to_poly,
    deep_hole_image,
    deep_hole_shape,
    dft,
    dft_poly,
    distance_preservation_check,
    idft,
    idft_poly,
    poly_to_cyclic,
)
from deephole.errors import DegreeTooHigh, LengthMismatch, NotDeepHoleShape
from deephole.gf import build_field, field_of_order
from deephole.poly import Poly, Word, eval_word, lagrange_interpolate
from deephole.rscode import CyclicRSCode

F11 = build_field(11)
Z11 = CyclicRSCode(F11, 5)


def plain_dft(v, p, alpha):
    n = p - 1
    return [sum(x * pow(alpha, i * j, p) for i, x in enumerate(v)) % p for j in range(n)]


def test_impulse_and_constant():
    for q in (4, 7, 9, 11):
        f = field_of_order(q)
        n = q - 1
        assert dft(Word(f, [1] + [0] * (n - 1))) == Word(f, [1] * n)
        assert dft(Word(f, [1] * n)) == Word(f, [f.neg(1)] + [0] * (n - 1))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_dft_matches_plain_integer_sum(p):
    f = build_field(p)
    rng = random.Random(p)
    for _ in range(100):
        v = [rng.randrange(p) for _ in range(p - 1)]
        assert list(dft(Word(f, v))) == plain_dft(v, p, f.alpha)


def test_round_trip_gf9():
    f = build_field(3, 2)
    rng = random.Random(0)
    for _ in range(300):
        w = Word(f, [rng.randrange(9) for _ in range(8)])
        assert idft(dft(w)) == w
        assert dft(idft(w)) == w
        pair = TransformPair.from_time(w)
        assert TransformPair.from_freq(pair.freq).time == w


def test_length_and_degree_errors():
    with pytest.raises(LengthMismatch):
        _transform(F11, [1, 2, 3], 1)
    with pytest.raises(DegreeTooHigh):
        dft_poly(Poly.monomial(F11, 10))


def test_dft_poly_of_constant_is_all_ones():
    assert dft_poly(Poly(F11, [1])) == Poly(F11, [1] * 10)


@pytest.mark.parametrize("q", [4, 8, 9, 11, 16])
def test_coefficient_route_equals_evaluation_route(q):
    f = field_of_order(q)
    rng = random.Random(q)
    for _ in range(100):
        V = Poly(f, [rng.randrange(q) for _ in range(q - 1)])
        assert dft_poly(V).padded(q - 1) == [V(x) for x in f.alpha_powers()]
        Vhat = dft_poly(V)
        # V_i = (1/(q-1)) Vhat(alpha^-i) and 1/(q-1) = -1
        assert idft_poly(Vhat).padded(q - 1) == [f.neg(Vhat(f.exp(-i))) for i in range(q - 1)]
        assert idft_poly(Vhat) == V


def test_dft_poly_of_low_degree_is_multiple_of_g():
    rng = random.Random(5)
    for _ in range(50):
        s = Poly(F11, [rng.randrange(11) for _ in range(5)])
        assert (dft_poly(s) % Z11.g).is_zero()


def test_poly_to_cyclic_examples():
    assert poly_to_cyclic(Z11, Poly.zero(F11)).is_zero()
    s = Poly.monomial(F11, 1)
    image = dft_poly(s)
    assert all(image(F11.exp(m)) == 0 for m in range(1, 6))
    l = poly_to_cyclic(Z11, s)
    assert l.degree <= 4 and l * Z11.g == image


def test_poly_to_cyclic_gf8_multiply_back():
    f = build_field(2, 3)
    z = CyclicRSCode(f, 3)
    rng = random.Random(8)
    for _ in range(100):
        s = Poly(f, [rng.randrange(8) for _ in range(3)])
        assert poly_to_cyclic(z, s) * z.g == dft_poly(s)


def test_cyclic_to_poly():
    assert cyclic_to_poly(Z11, Poly.zero(F11)).is_zero()
    s = idft_poly(Z11.g)
    assert all(s[i] == 0 for i in range(5, 10))
    assert cyclic_to_poly(Z11, Poly(F11, [1])) == s
    rng = random.Random(2)
    for _ in range(50):
        s = Poly(F11, [rng.randrange(11) for _ in range(5)])
        assert cyclic_to_poly(Z11, poly_to_cyclic(Z11, s)) == s


def _multiply_back(code, u):
    a, l, which = deep_hole_image(code, u)
    center = code.g1 if which == "g1" else code.g2
    assert a != 0 and l.degree <= code.k - 1
    return center.scale(a) + l * code.g == dft_poly(u), which


def test_deep_hole_image_examples():
    assert _multiply_back(Z11, Poly.monomial(F11, 9)) == (True, "g1")
    assert _multiply_back(Z11, Poly.monomial(F11, 5)) == (True, "g2")
    with pytest.raises(NotDeepHoleShape):
        deep_hole_image(Z11, Poly.monomial(F11, 7))
    with pytest.raises(NotDeepHoleShape):
        deep_hole_image(Z11, Poly(F11, [1, 2]))


def test_deep_hole_shape_classification():
    assert deep_hole_shape(Z11, Poly.parse(F11, "3+x+2x^9")) == "high"
    assert deep_hole_shape(Z11, Poly.parse(F11, "3+x+2x^5")) == "k"
    assert deep_hole_shape(Z11, Poly.parse(F11, "x^5+x^9")) is None
    z = CyclicRSCode(F11, 9)
    assert deep_hole_shape(z, Poly.monomial(F11, 9)) == "high"


def test_distance_preservation_examples():
    s = Poly(F11, [1, 2, 3])
    assert distance_preservation_check(s, s) == (0, 0)
    assert distance_preservation_check(s + Poly(F11, [4]), s) == (10, 10)
    rng = random.Random(11)
    for _ in range(200):
        a = Poly(F11, [rng.randrange(11) for _ in range(10)])
        b = Poly(F11, [rng.randrange(11) for _ in range(10)])
        lhs, rhs = distance_preservation_check(a, b)
        assert lhs == rhs


def test_linearity_small():
    f = build_field(7)
    rng = random.Random(4)
    for _ in range(100):
        a = Word(f, [rng.randrange(7) for _ in range(6)])
        b = Word(f, [rng.randrange(7) for _ in range(6)])
        lam, mu = rng.randrange(7), rng.randrange(7)
        assert dft(a.scale(lam) + b.scale(mu)) == dft(a).scale(lam) + dft(b).scale(mu)


def test_convolution():
    # transform of a pointwise product <-> product of transforms mod x^(q-1) - 1
    f = build_field(7)
    n = 6
    rng = random.Random(6)
    modulus = Poly(f, [f.neg(1)] + [0] * (n - 1) + [1])
    for _ in range(50):
        a = Word(f, [rng.randrange(7) for _ in range(n)])
        b = Word(f, [rng.randrange(7) for _ in range(n)])
        pa, pb = lagrange_interpolate(a), lagrange_interpolate(b)
        prod = Word(f, [f.mul(x, y) for x, y in zip(a, b)])
        assert lagrange_interpolate(prod) == (pa * pb) % modulus


def test_codeword_correspondence_gf5():
    f = build_field(5)
    z = CyclicRSCode(f, 2)
    images = {dft_poly(Poly(f, c)) for c in itertools.product(range(5), repeat=2)}
    multiples = {Poly(f, c) * z.g for c in itertools.product(range(5), repeat=2)}
    assert images == multiples and len(images) == 25

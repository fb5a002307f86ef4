"""Polynomial core: normalization, ring operations, division, rendering."""

import random
from fractions import Fraction

from congrkit.polynomials import Poly, poly_gcd


def test_trailing_zeros_are_pruned():
    assert Poly((1, 2, 0, 0)) == Poly((1, 2))
    assert Poly((0, 0)).is_zero()
    assert Poly(()).degree == -1
    assert Poly((0, 0, 3)).degree == 2


def test_integral_fractions_collapse_to_ints():
    assert Poly((Fraction(4, 2),)) == Poly((2,))
    assert Poly((1, 2)).is_integral()
    assert not Poly((Fraction(1, 2), 1)).is_integral()


def test_multiplication_matches_naive_convolution():
    rng = random.Random("poly-mul")
    for _ in range(40):
        a = [rng.randint(-99, 99) for _ in range(rng.randint(1, 12))]
        b = [rng.randint(-99, 99) for _ in range(rng.randint(1, 12))]
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        assert Poly(a) * Poly(b) == Poly(out)


def test_multiplication_with_fraction_scalars():
    p = Poly((Fraction(1, 2), 3)) * Poly((2, 2))
    assert p == Poly((1, 7, 6))
    assert (Poly((1, 1)) * Fraction(1, 3)) == Poly((Fraction(1, 3), Fraction(1, 3)))


def test_add_sub_negate():
    a = Poly((1, 2, 3))
    b = Poly((5, -2))
    assert a + b == Poly((6, 0, 3))
    assert a - b == Poly((-4, 4, 3))
    assert -a == Poly((-1, -2, -3))
    assert a + 1 == Poly((2, 2, 3))
    assert 1 - a == Poly((0, -2, -3))


def test_divmod_reconstructs_dividend():
    rng = random.Random("poly-div")
    for _ in range(30):
        b = Poly([rng.randint(-9, 9) for _ in range(rng.randint(1, 6))] + [rng.randint(1, 9)])
        a = Poly([rng.randint(-9, 9) for _ in range(rng.randint(0, 10))])
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


def test_power_shift_eval_derivative():
    p = Poly((1, 1))
    assert p**2 == Poly((1, 2, 1))
    assert p**0 == Poly((1,))
    assert Poly((3, 1)).shift(2) == Poly((0, 0, 3, 1))
    assert Poly((-1, 6, 2))(2) == 19
    assert Poly((5, 0, 3)).derivative() == Poly((0, 6))


def test_content_primitive_gcd():
    p = Poly((4, 8, 12))
    assert p.content() == 4
    assert p.primitive() == Poly((1, 2, 3))
    g = poly_gcd(Poly((-1, 0, 1)), Poly((-3, 2, 1)))
    assert g in (Poly((-1, 1)), Poly((1, -1)))


def test_divides_predicate():
    assert Poly((-1, 1)).divides(Poly((1, -2, 1)))
    assert not Poly((1, 1)).divides(Poly((1, 1, 1)))


def test_render_formats():
    assert Poly((-1, 6, 2)).render() == "2*x^2 + 6*x - 1"
    assert Poly((0, 1, -2)).render("q") == "-2*q^2 + q"
    assert Poly(()).render() == "0"
    assert Poly((5,)).render() == "5"

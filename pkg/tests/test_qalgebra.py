"""q-polynomial algebra: Gaussian binomials, cyclotomics, division, q-checks."""

import pytest

from congrkit import PASS
from congrkit.exactnum import binomial
from congrkit.polynomials import Poly
from congrkit.qalgebra import (
    QRationalFunction,
    check_conj57,
    check_conj58_q,
    check_lemma32,
    check_q_lucas,
    check_theorem31_q,
    check_theorem32_q,
    cyclotomic,
    cyclotomic_divides,
    divides_in_Zq,
    poly_divrem,
    q_binomial,
    q_int,
    q_int_divides,
    q_integer,
    qbinom,
    reduce_mod_qpow_minus_1,
    s_q,
    s_q_poly,
)
from congrkit.sequences import s_small


def test_q_integer_examples():
    assert q_int(3) == Poly((1, 1, 1))
    assert q_int(0).is_zero()
    neg = q_integer(-1)
    assert neg.num == Poly((-1,))
    assert neg.den == Poly((0, 1))
    assert q_integer(4) == QRationalFunction(q_int(4))


def test_gaussian_binomial_examples():
    assert qbinom(4, 2) == Poly((1, 1, 2, 1, 1))
    assert qbinom(7, 0) == Poly((1,))
    assert qbinom(2, 1) == Poly((1, 1))


def test_gaussian_binomial_negative_upper():
    assert q_binomial(-1, 2) == QRationalFunction(Poly((1,)), Poly.term(1, 3))
    for n in range(-6, 7):
        for k in range(7):
            assert q_binomial(n, k)(1) == binomial(n, k)


def test_q_pascal_rule():
    for n in range(1, 31):
        for k in range(1, 31):
            lhs = qbinom(n, k)
            assert lhs == qbinom(n - 1, k).shift(k) + qbinom(n - 1, k - 1)


def test_degeneration_at_one_degree_and_positivity():
    for n in range(31):
        assert q_int(n)(1) == n
        for k in range(n + 1):
            p = qbinom(n, k)
            assert p(1) == binomial(n, k)
            assert p.degree == k * (n - k)
            assert all(c >= 0 for c in p.coeffs)


def test_cyclotomic_examples():
    assert cyclotomic(1) == Poly((-1, 1))
    assert cyclotomic(4) == Poly((1, 0, 1))
    assert cyclotomic(6) == Poly((1, -1, 1))


def test_cyclotomic_product_identities():
    for n in range(1, 61):
        prod = Poly((1,))
        for d in range(1, n + 1):
            if n % d == 0:
                prod *= cyclotomic(d)
        assert prod == Poly((-1,) + (0,) * (n - 1) + (1,))
    for n in range(2, 61):
        prod = Poly((1,))
        for d in range(2, n + 1):
            if n % d == 0:
                prod *= cyclotomic(d)
        assert prod == q_int(n)


def test_poly_divrem_examples():
    assert poly_divrem(Poly((-1, 0, 1)), Poly((1, 1))) == (Poly((-1, 1)), Poly(()))
    assert poly_divrem(Poly((0, 0, 0, 1)), Poly((1, 1))) == (Poly((1, -1, 1)), Poly((-1,)))
    assert poly_divrem(Poly((-1, 0, 0, 0, 1)), Poly((1, 0, 1))) == (Poly((-1, 0, 1)), Poly(()))
    with pytest.raises(ZeroDivisionError):
        poly_divrem(Poly((1, 1)), Poly(()))


def test_integer_coefficient_divisibility():
    square = Poly((1, 1)) ** 2
    assert divides_in_Zq(square, square * Poly((-2, 3)))
    assert not divides_in_Zq(Poly((1, 1)), Poly((1, 1, 1)))
    assert divides_in_Zq(q_int(3), q_int(6))
    # rational quotient 1/2 must not count
    assert not divides_in_Zq(Poly((2,)), Poly((1,)))


def test_reduction_mod_qpow_minus_1():
    # q^5 folds onto q^2 when n = 3
    assert reduce_mod_qpow_minus_1(Poly.term(1, 5), 3) == Poly.term(1, 2)
    assert q_int_divides(3, q_int(6))
    assert not q_int_divides(4, q_int(6))
    assert cyclotomic_divides(3, q_int(6))


def test_q_lucas_instances():
    for a, b, s, t, d in ((2, 1, 1, 1, 2), (1, 0, 0, 0, 3), (1, 1, 2, 0, 3)):
        assert check_q_lucas(a, b, s, t, d).status == PASS


def test_cumulative_square_sum_cyclotomic_divisibility():
    assert check_lemma32(5, 1).status == PASS
    assert check_lemma32(3, 0).status == PASS
    assert check_lemma32(7, 2).status == PASS
    with pytest.raises(ValueError):
        check_lemma32(4, 2)


def test_weighted_square_prefix_divisible_by_q_integer():
    for n, k in ((1, 0), (4, 1), (6, 2)):
        assert check_theorem31_q(n, k).status == PASS


def test_alternating_mixed_power_sum():
    assert check_theorem32_q(1, 2, 2, 1).status == PASS
    r = check_theorem32_q(3, 1, 1, 1)
    assert r.status == PASS
    assert "q^2" in (r.note or "")
    assert check_theorem32_q(4, 2, 0, 1).status == PASS
    with pytest.raises(ValueError):
        check_theorem32_q(3, 1, 1, 3)


def test_deformed_sum_examples():
    assert s_q(0) == QRationalFunction(Poly((0, -1)))
    assert s_q(1) == QRationalFunction(Poly.term(1, 2))
    for n in range(26):
        assert s_q(n).is_polynomial()
    for n in range(21):
        assert s_q_poly(n)(1) == s_small(n)


def test_half_weighted_prefix_sum_ring_split():
    assert check_conj57(1).status == PASS
    two = check_conj57(2)
    assert two.status == PASS
    assert "(1/2)Z[q]" in (two.note or "")
    assert check_conj57(3).status == PASS


def test_factorial_weighted_prefix_sums():
    for m, n in ((1, 2), (2, 6), (3, 4)):
        assert check_conj58_q(m, n).status == PASS

"""Sequence generators against frozen terminal values and closed-form sums."""

import math
from fractions import Fraction

import pytest

from congrkit import PASS
from congrkit.polynomials import Poly
from congrkit.sequences import (
    R,
    R_poly,
    R_polys,
    R_values,
    S,
    S_cminus,
    S_cplus,
    S_m_poly,
    S_poly,
    S_values,
    T_minus,
    T_plus,
    T_seq,
    check_recurrence_R,
    check_recurrence_R_poly,
    check_recurrence_S,
    h,
    ratio_sum,
    s_small,
    schroder,
    t_seq,
)

R_GOLDEN = [
    -1, 1, 7, 25, 87, 329, 1359, 6001, 27759, 132689, 649815, 3242377,
    16421831, 84196761, 436129183, 2278835681, 11996748255,
]
S_GOLDEN = [
    1, 7, 55, 465, 4047, 35673, 316521, 2819295, 25173855, 225157881,
    2016242265, 18070920255, 162071863425,
]
R_POLY_GOLDEN = [
    (-1,),
    (-1, 2),
    (-1, 6, 2),
    (-1, 12, 10, 4),
    (-1, 20, 30, 28, 10),
    (-1, 30, 70, 112, 90, 28),
]
S_POLY_GOLDEN = [
    (1,),
    (1, 6),
    (1, 24, 30),
    (1, 54, 270, 140),
    (1, 96, 1080, 2240, 630),
    (1, 150, 3000, 14000, 15750, 2772),
]


def test_R_terminal_values():
    assert [R(n) for n in range(17)] == R_GOLDEN
    assert R_values(16) == R_GOLDEN
    assert R(0) == -1 and R(2) == 7 and R(16) == 11996748255


def test_S_terminal_values():
    assert [S(n) for n in range(13)] == S_GOLDEN
    assert S_values(12) == S_GOLDEN
    assert S(0) == 1 and S(3) == 465 and S(12) == 162071863425


def test_negative_index_rejected():
    for f in (R, S, schroder, t_seq, s_small):
        with pytest.raises(ValueError):
            f(-1)


def test_R_matches_both_closed_forms():
    for n in range(201):
        first = sum(
            Fraction(math.comb(n, k) * math.comb(n + k, k), 2 * k - 1)
            for k in range(n + 1)
        )
        second = sum(
            Fraction(math.comb(n + k, 2 * k) * math.comb(2 * k, k), 2 * k - 1)
            for k in range(n + 1)
        )
        assert first == second == R(n)


def test_schroder_matches_both_closed_forms():
    assert schroder(0) == 1
    assert schroder(2) == 6
    assert schroder(3) == 22
    for n in range(201):
        first = sum(
            Fraction(math.comb(n, k) * math.comb(n + k, k), k + 1)
            for k in range(n + 1)
        )
        second = sum(
            math.comb(n + k, 2 * k) * math.comb(2 * k, k) // (k + 1)
            for k in range(n + 1)
        )
        assert first == second == schroder(n)


def test_central_delannoy_square_sum():
    assert h(0) == 1
    assert h(2) == 7
    assert h(3) == 33
    for n in range(60):
        assert h(n) == sum(
            math.comb(n, k) ** 2 * math.comb(2 * k, k) // (k + 1) for k in range(n + 1)
        )


def test_polynomial_coefficient_tables():
    for n, coeffs in enumerate(R_POLY_GOLDEN):
        assert R_poly(n) == Poly(coeffs)
    for n, coeffs in enumerate(S_POLY_GOLDEN):
        assert S_poly(n) == Poly(coeffs)
    assert R_polys(5)[-1] == R_poly(5)


def test_polynomial_boundary_evaluations():
    for n in range(301):
        rp = R_poly(n)
        assert rp(1) == R(n)
        assert rp(0) == -1
        sp = S_poly(n)
        assert sp(1) == S(n)
        assert sp[0] == 1
        assert rp.is_integral() and sp.is_integral()


def test_mixed_power_polynomials():
    assert S_m_poly(2, 2) == S_poly(2)
    assert S_m_poly(1, 1) == Poly((1, 2))
    assert S_m_poly(3, 0) == Poly((1,))
    for n in range(101):
        assert S_m_poly(2, n) == S_poly(n)


def test_ratio_sum_values():
    assert ratio_sum(1, 1, 16) == Fraction(1, 8)
    assert ratio_sum(0, 0, 8) == -1
    # equals (2n+1) C(2n,n) C(2n,n+d) / ((4d^2-1) 16^n) at n=2, d=0
    assert ratio_sum(2, 0, 16) == Fraction(-45, 64)
    with pytest.raises(ValueError):
        ratio_sum(2, 0, 0)


def test_companion_sequence_values():
    assert t_seq(0) == -1 and t_seq(1) == 3
    assert T_seq(0) == 1 and T_seq(1) == 13
    assert T_plus(0) == 1 and T_plus(1) == 37
    assert T_minus(0) == 1 and T_minus(1) == -35
    assert s_small(0) == -1 and s_small(1) == 1
    assert S_cplus(1) == 19 and S_cplus(2) == 223
    assert S_cminus(1) == -17 and S_cminus(2) == 79


def test_companion_sequences_match_direct_sums():
    for n in range(40):
        rows = [
            (math.comb(n, k), math.comb(n + k, k), math.comb(2 * k, k))
            for k in range(n + 1)
        ]
        assert t_seq(n) == sum(
            Fraction(a * a * b * b, 2 * k - 1) for k, (a, b, _) in enumerate(rows)
        )
        assert T_seq(n) == sum(
            a * a * b * b * (2 * k + 1) for k, (a, b, _) in enumerate(rows)
        )
        assert T_plus(n) == sum(
            a * a * b * b * (2 * k + 1) ** 2 for k, (a, b, _) in enumerate(rows)
        )
        assert T_minus(n) == sum(
            (-1) ** k * a * a * b * b * (2 * k + 1) ** 2
            for k, (a, b, _) in enumerate(rows)
        )
        assert s_small(n) == sum(
            Fraction(a * a * c, 2 * k - 1) for k, (a, _, c) in enumerate(rows)
        )
        assert S_cplus(n) == sum(
            a * a * c * (2 * k + 1) ** 2 for k, (a, _, c) in enumerate(rows)
        )
        assert S_cminus(n) == sum(
            (-1) ** k * a * a * c * (2 * k + 1) ** 2 for k, (a, _, c) in enumerate(rows)
        )


def test_recurrences_hold_at_depth():
    assert check_recurrence_R(200).status == PASS
    assert check_recurrence_R_poly(100).status == PASS
    assert check_recurrence_S(200).status == PASS


def test_integer_families_extend_cleanly():
    for f in (R, S, schroder, h, t_seq, T_seq, T_plus, T_minus, s_small, S_cplus, S_cminus):
        for n in range(301):
            assert isinstance(f(n), int)

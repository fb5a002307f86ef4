"""Integer sequence and polynomial families built from binomial sums.

Every generator is a direct summation in exact arithmetic; the three-term
recurrences exposed at the bottom are *cross-checks* on the summations,
never the production path.  Sums whose terms contain a 2k - 1 denominator
are folded through binomial(2k, k) / (2k - 1), which is an integer for all
k >= 0 (equal to -1 at k = 0), so those families stay in integer arithmetic
from end to end.

Module-level value caches grow monotonically and are written only while a
single thread warms them; parallel drivers fork after warm-up or pay the
recompute in the child, so cached lists are effectively read-only.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

from .exactnum import central_binomial_over_2k_minus_1
from .polynomials import Poly
from .result import CheckResult, FAIL, PASS

__all__ = [
    "R",
    "R_poly",
    "R_values",
    "R_polys",
    "S",
    "S_poly",
    "S_values",
    "S_polys",
    "S_m_poly",
    "S_cminus",
    "S_cplus",
    "T_minus",
    "T_plus",
    "T_seq",
    "check_recurrence_R",
    "check_recurrence_R_poly",
    "check_recurrence_S",
    "h",
    "ratio_sum",
    "s_small",
    "schroder",
    "t_seq",
]

# -- shared incremental rows ------------------------------------------------

_CENTRAL = [1]  # binomial(2k, k)
_CENTRAL_OVER = [-1]  # binomial(2k, k) // (2k - 1)


def _central_rows(upto: int) -> tuple[list[int], list[int]]:
    k = len(_CENTRAL)
    while k <= upto:
        c = _CENTRAL[-1] * (2 * (2 * k - 1)) // k
        _CENTRAL.append(c)
        _CENTRAL_OVER.append(c // (2 * k - 1))
        k += 1
    return _CENTRAL, _CENTRAL_OVER


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("expected exact division: %d / %d" % (a, b))
    return q


# -- the two headline families ---------------------------------------------


def R(n: int) -> int:
    """sum_k binomial(n,k) binomial(n+k,k) / (2k - 1) as an exact integer."""
    if n < 0:
        raise ValueError("R: n must be >= 0")
    _, over = _central_rows(n)
    total = 0
    c = 1  # binomial(n + k, 2k)
    for k in range(n + 1):
        total += c * over[k]
        c = _exact_div(c * (n + k + 1) * (n - k), (2 * k + 1) * (2 * k + 2))
    return total


def R_poly(n: int) -> Poly:
    """The polynomial with x^k coefficient binomial(n+k,2k) binomial(2k,k)/(2k-1)."""
    if n < 0:
        raise ValueError("R_poly: n must be >= 0")
    _, over = _central_rows(n)
    coeffs = []
    c = 1
    for k in range(n + 1):
        coeffs.append(c * over[k])
        c = _exact_div(c * (n + k + 1) * (n - k), (2 * k + 1) * (2 * k + 2))
    return Poly(coeffs)


def S(n: int) -> int:
    """sum_k binomial(n,k)^2 binomial(2k,k) (2k+1)."""
    if n < 0:
        raise ValueError("S: n must be >= 0")
    central, _ = _central_rows(n)
    total = 0
    c = 1  # binomial(n, k)
    for k in range(n + 1):
        total += c * c * central[k] * (2 * k + 1)
        c = _exact_div(c * (n - k), k + 1)
    return total


def S_poly(n: int) -> Poly:
    """The polynomial with x^k coefficient binomial(n,k)^2 binomial(2k,k) (2k+1)."""
    if n < 0:
        raise ValueError("S_poly: n must be >= 0")
    central, _ = _central_rows(n)
    coeffs = []
    c = 1
    for k in range(n + 1):
        coeffs.append(c * c * central[k] * (2 * k + 1))
        c = _exact_div(c * (n - k), k + 1)
    return Poly(coeffs)


def S_m_poly(m: int, n: int) -> Poly:
    """x^k coefficient binomial(n,k)^m (km+1)!/(k!)^m; m = 2 gives S_poly."""
    if m < 1 or n < 0:
        raise ValueError("S_m_poly: need m >= 1 and n >= 0")
    coeffs = []
    c = 1  # binomial(n, k)
    f = 1  # (km + 1)! / (k!)^m
    for k in range(n + 1):
        coeffs.append(c**m * f)
        c = _exact_div(c * (n - k), k + 1)
        step = 1
        for j in range(k * m + 2, k * m + m + 2):
            step *= j
        f = _exact_div(f * step, (k + 1) ** m)
    return Poly(coeffs)


# -- companion families ------------------------------------------------------


def schroder(n: int) -> int:
    """sum_k binomial(n+k,2k) catalan(k), the large Schroeder number."""
    if n < 0:
        raise ValueError("schroder: n must be >= 0")
    central, _ = _central_rows(n)
    total = 0
    c = 1
    for k in range(n + 1):
        total += c * (central[k] // (k + 1))
        c = _exact_div(c * (n + k + 1) * (n - k), (2 * k + 1) * (2 * k + 2))
    return total


def h(n: int) -> int:
    """sum_k binomial(n,k)^2 catalan(k)."""
    if n < 0:
        raise ValueError("h: n must be >= 0")
    central, _ = _central_rows(n)
    total = 0
    c = 1
    for k in range(n + 1):
        total += c * c * (central[k] // (k + 1))
        c = _exact_div(c * (n - k), k + 1)
    return total


def ratio_sum(n: int, d: int, m: int) -> Fraction:
    """sum_{k<=n} binomial(2k,k) binomial(2k,k+d) / ((2k-1) m^k), exact."""
    if n < 0 or d < 0:
        raise ValueError("ratio_sum: need n >= 0 and d >= 0")
    if m == 0:
        raise ValueError("ratio_sum: m must be nonzero")
    _, over = _central_rows(n)
    # Horner over a common denominator m^n keeps everything in integers.
    acc = 0
    for k in range(n + 1):
        acc = acc * m + over[k] * math.comb(2 * k, k + d)
    return Fraction(acc, m**n)


def t_seq(n: int) -> int:
    """sum_k binomial(n,k)^2 binomial(n+k,k)^2 / (2k-1); each term is integral."""
    if n < 0:
        raise ValueError("t_seq: n must be >= 0")
    _, over = _central_rows(n)
    total = 0
    bnk = 1  # binomial(n, k)
    bnpk = 1  # binomial(n + k, k)
    b2 = 1  # binomial(n + k, 2k)
    for k in range(n + 1):
        total += bnk * bnpk * b2 * over[k]
        bnk = _exact_div(bnk * (n - k), k + 1)
        bnpk = _exact_div(bnpk * (n + k + 1), k + 1)
        b2 = _exact_div(b2 * (n + k + 1) * (n - k), (2 * k + 1) * (2 * k + 2))
    return total


def _weighted_tt(n: int, weight: Callable[[int], int]) -> int:
    total = 0
    bnk = 1
    bnpk = 1
    for k in range(n + 1):
        sq = bnk * bnpk
        total += weight(k) * sq * sq
        bnk = _exact_div(bnk * (n - k), k + 1)
        bnpk = _exact_div(bnpk * (n + k + 1), k + 1)
    return total


def T_seq(n: int) -> int:
    """sum_k binomial(n,k)^2 binomial(n+k,k)^2 (2k+1)."""
    if n < 0:
        raise ValueError("T_seq: n must be >= 0")
    return _weighted_tt(n, lambda k: 2 * k + 1)


def T_plus(n: int) -> int:
    """sum_k binomial(n,k)^2 binomial(n+k,k)^2 (2k+1)^2."""
    if n < 0:
        raise ValueError("T_plus: n must be >= 0")
    return _weighted_tt(n, lambda k: (2 * k + 1) ** 2)


def T_minus(n: int) -> int:
    """sum_k (-1)^k binomial(n,k)^2 binomial(n+k,k)^2 (2k+1)^2."""
    if n < 0:
        raise ValueError("T_minus: n must be >= 0")
    return _weighted_tt(n, lambda k: (2 * k + 1) ** 2 * (-1 if k % 2 else 1))


def _weighted_central(n: int, weight: Callable[[int], int], over: bool) -> int:
    central, over_row = _central_rows(n)
    row = over_row if over else central
    total = 0
    c = 1
    for k in range(n + 1):
        total += weight(k) * c * c * row[k]
        c = _exact_div(c * (n - k), k + 1)
    return total


def s_small(n: int) -> int:
    """sum_k binomial(n,k)^2 binomial(2k,k) / (2k-1); each term is integral."""
    if n < 0:
        raise ValueError("s_small: n must be >= 0")
    return _weighted_central(n, lambda k: 1, over=True)


def S_cplus(n: int) -> int:
    """sum_k binomial(n,k)^2 binomial(2k,k) (2k+1)^2."""
    if n < 0:
        raise ValueError("S_cplus: n must be >= 0")
    return _weighted_central(n, lambda k: (2 * k + 1) ** 2, over=False)


def S_cminus(n: int) -> int:
    """sum_k (-1)^k binomial(n,k)^2 binomial(2k,k) (2k+1)^2."""
    if n < 0:
        raise ValueError("S_cminus: n must be >= 0")
    return _weighted_central(
        n, lambda k: (2 * k + 1) ** 2 * (-1 if k % 2 else 1), over=False
    )


# -- grown-once value caches --------------------------------------------------

_R_CACHE: list[int] = []
_S_CACHE: list[int] = []
_R_POLY_CACHE: list[Poly] = []
_S_POLY_CACHE: list[Poly] = []


def R_values(n_max: int) -> list[int]:
    """[R(0), ..., R(n_max)], served from a monotone cache."""
    while len(_R_CACHE) <= n_max:
        _R_CACHE.append(R(len(_R_CACHE)))
    return _R_CACHE[: n_max + 1]


def S_values(n_max: int) -> list[int]:
    while len(_S_CACHE) <= n_max:
        _S_CACHE.append(S(len(_S_CACHE)))
    return _S_CACHE[: n_max + 1]


def R_polys(n_max: int) -> list[Poly]:
    while len(_R_POLY_CACHE) <= n_max:
        _R_POLY_CACHE.append(R_poly(len(_R_POLY_CACHE)))
    return _R_POLY_CACHE[: n_max + 1]


def S_polys(n_max: int) -> list[Poly]:
    while len(_S_POLY_CACHE) <= n_max:
        _S_POLY_CACHE.append(S_poly(len(_S_POLY_CACHE)))
    return _S_POLY_CACHE[: n_max + 1]


# -- recurrence cross-checks ---------------------------------------------------


def check_recurrence_R(n_max: int) -> CheckResult:
    """Third-order recurrence satisfied by the R numbers, checked on [0, n_max-3]."""
    r = R_values(n_max)
    for n in range(n_max - 2):
        lhs = (
            (n + 1) * r[n]
            - (7 * n + 15) * r[n + 1]
            + (7 * n + 13) * r[n + 2]
            - (n + 3) * r[n + 3]
        )
        if lhs != 0:
            return CheckResult(
                family="rec_r",
                params={"n_max": n_max},
                status=FAIL,
                lhs=str(lhs),
                rhs="0",
                witness={"n": n},
            )
    return CheckResult(
        family="rec_r", params={"n_max": n_max}, status=PASS, lhs="0", rhs="0"
    )


def check_recurrence_R_poly(n_max: int) -> CheckResult:
    """Same recurrence at polynomial level, with the linear-in-x multipliers."""
    polys = R_polys(n_max)
    for n in range(n_max - 2):
        lhs = (
            (n + 1) * polys[n]
            - Poly((3 * n + 5, 4 * n + 10)) * polys[n + 1]
            + Poly((3 * n + 7, 4 * n + 6)) * polys[n + 2]
            - (n + 3) * polys[n + 3]
        )
        if not lhs.is_zero():
            return CheckResult(
                family="rec_r_poly",
                params={"n_max": n_max},
                status=FAIL,
                lhs=lhs.render(),
                rhs="0",
                witness={"n": n},
            )
    return CheckResult(
        family="rec_r_poly", params={"n_max": n_max}, status=PASS, lhs="0", rhs="0"
    )


def check_recurrence_S(n_max: int) -> CheckResult:
    """Third-order recurrence satisfied by the S numbers, checked on [0, n_max-3]."""
    s = S_values(n_max)
    for n in range(n_max - 2):
        lhs = (
            9 * (n + 1) ** 2 * s[n]
            - (19 * n * n + 74 * n + 87) * s[n + 1]
            + (n + 3) * (11 * n + 29) * s[n + 2]
            - (n + 3) ** 2 * s[n + 3]
        )
        if lhs != 0:
            return CheckResult(
                family="rec_s",
                params={"n_max": n_max},
                status=FAIL,
                lhs=str(lhs),
                rhs="0",
                witness={"n": n},
            )
    return CheckResult(
        family="rec_s", params={"n_max": n_max}, status=PASS, lhs="0", rhs="0"
    )

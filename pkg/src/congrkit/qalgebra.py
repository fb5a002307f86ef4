"""q-analogue arithmetic: q-integers, Gaussian binomials, cyclotomic
polynomials, rational functions in q, and the q-congruence checkers.

Divisibility by the q-integer [n]_q = 1 + q + ... + q^(n-1) is decided by
the fold trick: [n]_q divides A in Z[q] exactly when (q - 1) A vanishes
modulo q^n - 1, and reduction mod q^n - 1 is a linear-time coefficient
fold.  [n]_q is monic, so a zero remainder automatically has an integer
quotient.  Divisibility by a cyclotomic Phi_d goes through the same fold
followed by one small long division.

Laurent-monomial prefactors (negative powers of q) that appear in one of
the alternating-sum families are cleared by multiplying the whole sum by
q^(n-1); q is invertible modulo [n]_q (its constant term is 1), so the
congruence is unchanged.  The cleared power is recorded on the result.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, lcm
from typing import Union

from .polynomials import Poly, poly_gcd
from .result import CheckResult, FAIL, PASS

__all__ = [
    "QRationalFunction",
    "check_conj57",
    "check_conj58_q",
    "check_lemma32",
    "check_q_lucas",
    "check_theorem31_q",
    "check_theorem32_q",
    "cyclotomic",
    "cyclotomic_divides",
    "divides_in_Zq",
    "poly_divrem",
    "q_binomial",
    "q_int",
    "q_int_divides",
    "q_integer",
    "qbinom",
    "reduce_mod_qpow_minus_1",
    "s_q",
    "s_q_poly",
]

Scalar = Union[int, Fraction]


# -- polynomial-level q objects ------------------------------------------------


def q_int(n: int) -> Poly:
    """[n]_q = 1 + q + ... + q^(n-1) for n >= 0 (zero polynomial at n = 0)."""
    if n < 0:
        raise ValueError("q_int: n must be >= 0; use q_integer for negative n")
    return Poly((1,) * n)


_QBIN_ROWS: list[list[Poly]] = [[Poly((1,))]]


def qbinom(n: int, k: int) -> Poly:
    """Gaussian binomial [n choose k]_q for n >= 0, from the q-Pascal rule."""
    if n < 0 or k < 0:
        raise ValueError("qbinom: need n >= 0 and k >= 0")
    if k > n:
        return Poly()
    while len(_QBIN_ROWS) <= n:
        m = len(_QBIN_ROWS)
        prev = _QBIN_ROWS[-1]
        row = [Poly((1,))]
        for j in range(1, m):
            row.append(prev[j].shift(j) + prev[j - 1])
        row.append(Poly((1,)))
        _QBIN_ROWS.append(row)
    return _QBIN_ROWS[n][k]


_CYCLO: dict[int, Poly] = {}


def cyclotomic(d: int) -> Poly:
    """The d-th cyclotomic polynomial, by exact division of q^d - 1."""
    if d < 1:
        raise ValueError("cyclotomic: d must be >= 1")
    got = _CYCLO.get(d)
    if got is None:
        got = Poly((-1,) + (0,) * (d - 1) + (1,))  # q^d - 1
        for e in range(1, d):
            if d % e == 0:
                got, rem = divmod(got, cyclotomic(e))
                if not rem.is_zero():
                    raise AssertionError("cyclotomic division must be exact")
        _CYCLO[d] = got
    return got


def reduce_mod_qpow_minus_1(a: Poly, n: int) -> Poly:
    """a mod (q^n - 1): fold coefficient i into slot i mod n."""
    if n < 1:
        raise ValueError("modulus exponent must be >= 1")
    if a.degree < n:
        return a
    out: list[Scalar] = [0] * n
    for i, c in enumerate(a.coeffs):
        out[i % n] += c
    return Poly(out)


def q_int_divides(n: int, a: Poly) -> bool:
    """True iff [n]_q divides a in Z[q] (a integral; [n]_q is monic)."""
    if n < 1:
        raise ValueError("q_int_divides: n must be >= 1")
    if n == 1:
        return True
    return reduce_mod_qpow_minus_1(a * Poly((-1, 1)), n).is_zero()


def cyclotomic_divides(d: int, a: Poly) -> bool:
    """True iff Phi_d(q) divides a (fold mod q^d - 1, then one long division)."""
    return (reduce_mod_qpow_minus_1(a, d) % cyclotomic(d)).is_zero()


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder of a by b over Q."""
    return divmod(a, b)


def divides_in_Zq(b: Poly, a: Poly) -> bool:
    """True iff b divides a with an integer-coefficient quotient."""
    if b.is_zero():
        return a.is_zero()
    q, r = divmod(a, b)
    return r.is_zero() and q.is_integral()


# -- rational functions in q ---------------------------------------------------


class QRationalFunction:
    """num/den with integer-coefficient polynomials, gcd 1, positive-leading den."""

    __slots__ = ("num", "den")

    num: Poly
    den: Poly

    def __init__(self, num: "Poly | Scalar", den: "Poly | Scalar" = 1) -> None:
        if isinstance(num, (int, Fraction)):
            num = Poly.const(num)
        if isinstance(den, (int, Fraction)):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in QRationalFunction")
        scale = 1
        for p in (num, den):
            for c in p.coeffs:
                if isinstance(c, Fraction):
                    scale = lcm(scale, c.denominator)
        if scale != 1:
            num, den = num * scale, den * scale
        if num.is_zero():
            den = Poly((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree >= 1:
                num, den = num // g, den // g
            c = gcd(int(num.content()), int(den.content()))
            if c > 1:
                num, den = num * Fraction(1, c), den * Fraction(1, c)
            if den.leading() < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QRationalFunction is immutable")

    def is_polynomial(self) -> bool:
        return self.den == Poly((1,))

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError("not a polynomial: %s" % (self.render(),))
        return self.num

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QRationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction)):
            return self == QRationalFunction(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __mul__(self, other: "QRationalFunction | Poly | Scalar") -> "QRationalFunction":
        if not isinstance(other, QRationalFunction):
            other = QRationalFunction(other)
        return QRationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "QRationalFunction | Poly | Scalar") -> "QRationalFunction":
        if not isinstance(other, QRationalFunction):
            other = QRationalFunction(other)
        return QRationalFunction(self.num * other.den, self.den * other.num)

    def __add__(self, other: "QRationalFunction | Poly | Scalar") -> "QRationalFunction":
        if not isinstance(other, QRationalFunction):
            other = QRationalFunction(other)
        return QRationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "QRationalFunction":
        return QRationalFunction(-self.num, self.den)

    def __sub__(self, other: "QRationalFunction | Poly | Scalar") -> "QRationalFunction":
        return self + (-(other if isinstance(other, QRationalFunction) else QRationalFunction(other)))

    def __call__(self, x: Scalar) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at %r" % (x,))
        return Fraction(self.num(x)) / Fraction(d)

    def render(self) -> str:
        if self.is_polynomial():
            return self.num.render("q")
        num = self.num.render("q")
        den = self.den.render("q")
        if sum(1 for c in self.num.coeffs if c) > 1:
            num = "(%s)" % num
        if sum(1 for c in self.den.coeffs if c) > 1:
            den = "(%s)" % den
        return "%s/%s" % (num, den)

    def __repr__(self) -> str:
        return "QRationalFunction(%s)" % (self.render(),)


def q_integer(n: int) -> QRationalFunction:
    """[n]_q for any integer n; negative n gives -[|n|]_q / q^|n|."""
    if n >= 0:
        return QRationalFunction(q_int(n))
    m = -n
    return QRationalFunction(-q_int(m), Poly.term(1, m))


def q_binomial(n: int, k: int) -> QRationalFunction:
    """[n choose k]_q for any integer n, via the falling product for n < 0."""
    if k < 0:
        raise ValueError("q_binomial: k must be >= 0")
    if n >= 0:
        return QRationalFunction(qbinom(n, k))
    num = Poly((1,))
    den = Poly((1,))
    for j in range(k):
        f = q_integer(n - j)
        num *= f.num
        den *= f.den * q_int(j + 1)
    return QRationalFunction(num, den)


# -- the q-sum families ----------------------------------------------------------


_CENTRAL_Q_OVER: dict[int, Poly] = {}


def _central_q_over(k: int) -> Poly:
    """qbinom(2k, k) / [2k-1]_q, exact in Z[q] for k >= 1."""
    got = _CENTRAL_Q_OVER.get(k)
    if got is None:
        got, rem = divmod(qbinom(2 * k, k), q_int(2 * k - 1))
        if not rem.is_zero():
            raise AssertionError("[2k-1]_q must divide [2k choose k]_q")
        _CENTRAL_Q_OVER[k] = got
    return got


_SQ_POLY: list[Poly] = []


def s_q_poly(n: int) -> Poly:
    """Polynomial value of the q-analogue sum s_n(q); see s_q."""
    if n < 0:
        raise ValueError("s_q_poly: n must be >= 0")
    while len(_SQ_POLY) <= n:
        m = len(_SQ_POLY)
        total = Poly((0, -1))  # k = 0 term: q^0 / [-1]_q = -q
        for k in range(1, m + 1):
            total += (qbinom(m, k) ** 2 * _central_q_over(k)).shift(k)
        _SQ_POLY.append(total)
    return _SQ_POLY[n]


def s_q(n: int) -> QRationalFunction:
    """sum_k [n choose k]_q^2 [2k choose k]_q q^k / [2k-1]_q.

    The k = 0 term divides by [-1]_q = -1/q and contributes -q; every other
    term is polynomial because [2k-1]_q divides [2k choose k]_q.  The value
    is therefore always a polynomial, returned here in rational-function
    clothing to match the signature of the other q-sums.
    """
    return QRationalFunction(s_q_poly(n))


# -- cumulative q-sums used by several checkers ----------------------------------

_SUM31: dict[tuple[int, int], Poly] = {}


def _sum31(n: int, k: int) -> Poly:
    """sum_{h<n} q^h [h choose k]_q^2 (terms with h < k vanish)."""
    if n <= k:
        return Poly()
    got = _SUM31.get((n, k))
    if got is None:
        got = _sum31(n - 1, k) + (qbinom(n - 1, k) ** 2).shift(n - 1)
        _SUM31[(n, k)] = got
    return got


_SUM58: dict[tuple[int, int, int], Poly] = {}


def _sum58(m: int, n: int, k: int) -> Poly:
    """sum_{h=k}^{n-1} q^h [h choose k]_q^m."""
    if n <= k:
        return Poly()
    got = _SUM58.get((m, n, k))
    if got is None:
        got = _sum58(m, n - 1, k) + (qbinom(n - 1, k) ** m).shift(n - 1)
        _SUM58[(m, n, k)] = got
    return got


_PREF58: dict[tuple[int, int], Poly] = {}


def _conj58_prefactor(m: int, k: int) -> Poly:
    """prod_{j<=km+1} [j]_q / (prod_{j<=k} [j]_q)^m as an exact polynomial.

    Uses the telescoping [km]_q! / ([k]_q!)^m = prod_{i=2..m} [ik choose k]_q,
    so no polynomial division is needed.
    """
    got = _PREF58.get((m, k))
    if got is None:
        got = q_int(k * m + 1)
        for i in range(2, m + 1):
            got *= qbinom(i * k, k)
        _PREF58[(m, k)] = got
    return got


# -- checkers ---------------------------------------------------------------------


def _poly_note(p: Poly) -> str:
    if len(p.coeffs) <= 16:
        return p.render("q")
    return "polynomial of degree %d" % (p.degree,)


def check_q_lucas(a: int, b: int, s: int, t: int, d: int) -> CheckResult:
    """[ad+s choose bd+t]_q == binomial(a,b) [s choose t]_q mod Phi_d(q)."""
    if d < 1 or not (0 <= s < d and 0 <= t < d) or a < 0 or b < 0:
        raise ValueError("check_q_lucas: need d >= 1, 0 <= s,t < d, a,b >= 0")
    params = {"a": a, "b": b, "s": s, "t": t, "d": d}
    lhs = qbinom(a * d + s, b * d + t)
    rhs = comb(a, b) * qbinom(s, t)
    ok = cyclotomic_divides(d, lhs - rhs)
    return CheckResult(
        family="qlucas",
        params=params,
        status=PASS if ok else FAIL,
        lhs=_poly_note(reduce_mod_qpow_minus_1(lhs, d) % cyclotomic(d)),
        rhs=_poly_note(reduce_mod_qpow_minus_1(rhs, d) % cyclotomic(d)),
        modulus="Phi_%d(q)" % d,
    )


def check_lemma32(n: int, k: int) -> CheckResult:
    """Phi_n(q) divides sum_{h<n} q^h [h choose k]_q^2 when k < (n-1)/2."""
    if not (0 <= 2 * k < n - 1):
        raise ValueError("check_lemma32: need 0 <= k < (n-1)/2")
    total = _sum31(n, k)
    ok = cyclotomic_divides(n, total)
    return CheckResult(
        family="lemma32",
        params={"n": n, "k": k},
        status=PASS if ok else FAIL,
        lhs=_poly_note(total),
        rhs="0",
        modulus="Phi_%d(q)" % n,
    )


def check_theorem31_q(n: int, k: int) -> CheckResult:
    """[n]_q divides [2k+1]_q [2k choose k]_q sum_{h<n} q^h [h choose k]_q^2."""
    if not 0 <= k < n:
        raise ValueError("check_theorem31_q: need 0 <= k < n")
    total = q_int(2 * k + 1) * qbinom(2 * k, k) * _sum31(n, k)
    ok = q_int_divides(n, total)
    return CheckResult(
        family="thm31q",
        params={"n": n, "k": k},
        status=PASS if ok else FAIL,
        lhs=_poly_note(total),
        rhs="0",
        modulus="[%d]_q" % n,
    )


def check_theorem32_q(n: int, a: int, b: int, a_prime: int) -> CheckResult:
    """Alternating [2k+1]_q [n-1 choose k]^a [n+k choose k]^b sum is 0 mod [n]_q.

    Terms carry q^(a'k(k+1)/2 - k); the whole sum is multiplied by q^(n-1)
    to clear the negative exponents before the divisibility test.
    """
    if n < 1 or a < 0 or b < 0 or a_prime not in (a, a - 1) or a_prime < 0:
        raise ValueError("check_theorem32_q: need n >= 1, a >= a' >= 0, a' in {a, a-1}")
    total = Poly()
    for k in range(n):
        base = qbinom(n - 1, k) ** a * qbinom(n + k, k) ** b * q_int(2 * k + 1)
        e = (n - 1) + a_prime * k * (k + 1) // 2 - k
        term = base.shift(e)
        total = total - term if (a_prime * k) % 2 else total + term
    ok = q_int_divides(n, total)
    return CheckResult(
        family="thm32q",
        params={"n": n, "a": a, "b": b, "a_prime": a_prime},
        status=PASS if ok else FAIL,
        lhs=_poly_note(total),
        rhs="0",
        modulus="[%d]_q" % n,
        note="sum cleared by q^%d" % (n - 1),
    )


def check_conj57(n: int) -> CheckResult:
    """[n]_q^2 divides (1+q) sum_{k<n} q^k s_k(q) over Q[q]; integrality class noted.

    The underlying claim divides the sum by 2, so the meaningful quotient is
    half of the polynomial quotient computed here; the note records whether
    that half-quotient stays in Z[q] or only in (1/2) Z[q].
    """
    if n < 1:
        raise ValueError("check_conj57: n must be >= 1")
    acc = Poly()
    for k in range(n):
        acc += s_q_poly(k).shift(k)
    total = acc * Poly((1, 1))
    d = q_int(n)
    q1, r1 = divmod(total, d)
    if r1.is_zero():
        q2, r2 = divmod(q1, d)
    else:
        q2, r2 = Poly(), Poly((1,))
    ok = r1.is_zero() and r2.is_zero()
    note = ""
    if ok:
        half_integral = any(c % 2 for c in q2.coeffs)
        note = (
            "PASS in Q[q]; half-quotient in (1/2)Z[q] only"
            if half_integral
            else "PASS in Q[q]; half-quotient in Z[q]"
        )
    return CheckResult(
        family="conj57",
        params={"n": n},
        status=PASS if ok else FAIL,
        lhs=_poly_note(total),
        rhs="0",
        modulus="[%d]_q^2" % n,
        note=note,
    )


def check_conj58_q(m: int, n: int) -> CheckResult:
    """For every k < n, [n]_q divides the [j]_q-product prefactor times
    sum_{h=k}^{n-1} q^h [h choose k]_q^m."""
    if m < 1 or n < 1:
        raise ValueError("check_conj58_q: need m >= 1 and n >= 1")
    for k in range(n):
        total = _conj58_prefactor(m, k) * _sum58(m, n, k)
        if not q_int_divides(n, total):
            return CheckResult(
                family="conj58q",
                params={"m": m, "n": n},
                status=FAIL,
                lhs=_poly_note(total),
                rhs="0",
                modulus="[%d]_q" % n,
                witness={"k": k},
            )
    return CheckResult(
        family="conj58q",
        params={"m": m, "n": n},
        status=PASS,
        lhs="all k < %d" % n,
        rhs="0",
        modulus="[%d]_q" % n,
    )

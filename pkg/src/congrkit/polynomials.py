"""Dense univariate polynomials with exact coefficients.

One representation serves both the x-polynomials of the sequence families
and the q-polynomials of the q-analogue checks: a tuple of coefficients in
ascending degree order with trailing zeros pruned, so the zero polynomial
is the empty tuple and equality is plain tuple equality.  Coefficients are
ints whenever possible; Fractions appear only when a computation genuinely
leaves the integers (rational division, non-monic divmod).

Multiplication of integer polynomials routes through Kronecker
substitution (pack into one big int, multiply, unpack), which turns the
coefficient convolution into a single CPython big-int multiply.  That is
what keeps the degree-1000-plus q-polynomial scans affordable.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = ["Poly", "X", "poly_gcd"]

Scalar = Union[int, Fraction]

_KRONECKER_CUTOFF = 40  # schoolbook below this many output coefficients


def _norm_scalar(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """Immutable dense polynomial; value semantics, hashable."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Scalar, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [_norm_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def term(cls, c: Scalar, e: int) -> "Poly":
        if e < 0:
            raise ValueError("term exponent must be >= 0")
        return cls((0,) * e + (c,))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_integral(self) -> bool:
        """True iff every coefficient is an integer."""
        return all(isinstance(c, int) for c in self.coeffs)

    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "Poly(%r)" % (list(self.coeffs),)

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Poly":
        return Poly.const(other) + (-self)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        if len(a) + len(b) >= _KRONECKER_CUTOFF and self.is_integral() and other.is_integral():
            return Poly(_kronecker_convolve(a, b))
        out: list[Scalar] = [0] * (len(a) + len(b) - 1)
        if len(a) > len(b):
            a, b = b, a
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, e: int) -> "Poly":
        """Multiply by x**e."""
        if e < 0:
            raise ValueError("shift exponent must be >= 0")
        if not self.coeffs:
            return self
        return Poly((0,) * e + self.coeffs)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact long division over Q; integer fast path for monic divisors."""
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a, b = list(self.coeffs), other.coeffs
        db = len(b) - 1
        if len(a) <= db:
            return Poly(), self
        if b[-1] == 1 and other.is_integral() and self.is_integral():
            q: list[Scalar] = [0] * (len(a) - db)
            for i in range(len(a) - 1, db - 1, -1):
                c = a[i]
                if c:
                    q[i - db] = c
                    a[i] = 0
                    for j in range(db):
                        a[i - db + j] -= c * b[j]
            return Poly(q), Poly(a)
        lead = Fraction(b[-1])
        q = [0] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            if a[i]:
                c = a[i] / lead if isinstance(a[i], Fraction) else Fraction(a[i]) / lead
                q[i - db] = c
                a[i] = 0
                for j in range(db):
                    a[i - db + j] -= c * b[j]
        return Poly(q), Poly(a)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True iff self divides other exactly (over Q)."""
        if self.is_zero():
            return other.is_zero()
        return divmod(other, self)[1].is_zero()

    # -- evaluation and calculus ----------------------------------------

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm_scalar(acc if isinstance(acc, (int, Fraction)) else Fraction(acc))

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    # -- integer-content helpers ----------------------------------------

    def content(self) -> Fraction:
        """gcd of coefficients over Q (positive), 0 for the zero polynomial."""
        from math import gcd

        if not self.coeffs:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            f = Fraction(c)
            num = gcd(num, f.numerator)
            den = den * f.denominator // gcd(den, f.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """self / content, normalized to a positive leading coefficient."""
        c = self.content()
        if c == 0:
            return self
        p = self * (1 / c)
        return -p if p.leading() < 0 else p

    # -- rendering -------------------------------------------------------

    def render(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if e == 0:
                body = str(mag)
            else:
                xe = var if e == 1 else "%s^%d" % (var, e)
                body = xe if mag == 1 else "%s*%s" % (mag, xe)
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append("%s %s" % (sign, body))
        return " ".join(parts)


X = Poly((0, 1))


def _kronecker_convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Integer coefficient convolution via big-int packing."""
    max_a = max(abs(c) for c in a)
    max_b = max(abs(c) for c in b)
    if max_a == 0 or max_b == 0:
        return []
    bound = min(len(a), len(b)) * max_a * max_b
    nbytes = (bound.bit_length() + 2 + 7) // 8  # slack bit keeps sums separated
    n_out = len(a) + len(b) - 1
    a_pos, a_neg = _pack_split(a, nbytes)
    b_pos, b_neg = _pack_split(b, nbytes)
    plus = a_pos * b_pos + a_neg * b_neg
    minus = a_pos * b_neg + a_neg * b_pos
    return [
        p - m
        for p, m in zip(_unpack(plus, nbytes, n_out), _unpack(minus, nbytes, n_out))
    ]


def _pack_split(cs: Sequence[int], nbytes: int) -> tuple[int, int]:
    """Pack positive and negated-negative parts into little-endian big ints."""
    pos = bytearray(nbytes * len(cs))
    neg = bytearray(nbytes * len(cs))
    for i, c in enumerate(cs):
        if c > 0:
            pos[i * nbytes : i * nbytes + (c.bit_length() + 7) // 8] = c.to_bytes(
                (c.bit_length() + 7) // 8, "little"
            )
        elif c < 0:
            c = -c
            neg[i * nbytes : i * nbytes + (c.bit_length() + 7) // 8] = c.to_bytes(
                (c.bit_length() + 7) // 8, "little"
            )
    return int.from_bytes(pos, "little"), int.from_bytes(neg, "little")


def _unpack(value: int, nbytes: int, count: int) -> list[int]:
    raw = value.to_bytes(nbytes * count + nbytes, "little")
    return [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little")
        for i in range(count)
    ]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic-free gcd over Q, returned primitive with integer coefficients."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.primitive()

"""Exact real numbers of the shape a + b*sqrt(m) with a, b rational.

Every predicate in the library (geodesic crossings, interval membership,
region tests) reduces to comparing such numbers, so they are kept exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering

from .errors import IncompatibleRadicands


def int_sqrt_exact(n):
    """Return r with r*r == n if n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def _square_split(m):
    # m = k^2 * s with s squarefree
    k, s = 1, m
    p = 2
    while p * p <= s:
        while s % (p * p) == 0:
            s //= p * p
            k *= p
        p += 1 if p == 2 else 2
    return k, s


def _sign(x):
    return (x > 0) - (x < 0)


@total_ordering
class QuadValue:
    """The real number a + b*sqrt(m), canonicalised.

    The radicand is made squarefree and rational values carry m == 0, so
    structural equality is numeric equality.
    """

    __slots__ = ("a", "b", "m")

    def __init__(self, a=0, b=0, m=0):
        a, b = Fraction(a), Fraction(b)
        m = int(m)
        if m < 0:
            raise ValueError("negative radicand")
        if b and m:
            k, s = _square_split(m)
            b *= k
            if s == 1:
                a, b, s = a + b, Fraction(0), 0
            m = s
        if not b or not m:
            b, m = Fraction(0), 0
        self.a, self.b, self.m = a, b, m

    @classmethod
    def sqrt(cls, x):
        """sqrt(x) for a nonnegative rational x."""
        x = Fraction(x)
        if x < 0:
            raise ValueError("sqrt of a negative number")
        # sqrt(p/q) = sqrt(p*q)/q
        return cls(0, Fraction(1, x.denominator), x.numerator * x.denominator)

    @property
    def is_rational(self):
        return self.b == 0

    def _coerce(self, other):
        if isinstance(other, QuadValue):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadValue(other)
        return NotImplemented

    def _radicand(self, other):
        if self.m and other.m and self.m != other.m:
            raise IncompatibleRadicands(f"sqrt({self.m}) vs sqrt({other.m})")
        return self.m or other.m

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = self._radicand(other)
        return QuadValue(self.a + other.a, self.b + other.b, m)

    __radd__ = __add__

    def __neg__(self):
        return QuadValue(-self.a, -self.b, self.m)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = self._radicand(other)
        a = self.a * other.a + self.b * other.b * m
        b = self.a * other.b + self.b * other.a
        return QuadValue(a, b, m)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadValue(self.a, -self.b, self.m)

    def norm(self):
        """a^2 - m b^2 (rational)."""
        return self.a * self.a - self.b * self.b * self.m

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero QuadValue")
        num = self * other.conjugate()
        return QuadValue(num.a / n, num.b / n, num.m)

    def __rtruediv__(self, other):
        return QuadValue(other) / self

    def sign(self):
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        d = self.a * self.a - self.b * self.b * self.m
        return sa if d > 0 else sb

    def floor(self):
        if self.b == 0:
            return math.floor(self.a)
        t = self.b * self.b * self.m
        est = math.floor(self.a + _sign(self.b) * Fraction(math.isqrt(t.numerator * t.denominator), t.denominator))
        while (self - est).sign() < 0:
            est -= 1
        while (self - (est + 1)).sign() >= 0:
            est += 1
        return est

    def ceil(self):
        return -((-self).floor())

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.m)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self.a, self.b, self.m) == (other.a, other.b, other.m)

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign() < 0

    def __hash__(self):
        return hash((self.a, self.b, self.m))

    def __repr__(self):
        if self.b == 0:
            return f"QuadValue({self.a})"
        return f"QuadValue({self.a} + {self.b}*sqrt({self.m}))"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.m})"


def quad_arith(x, y, op):
    """Dispatch helper mirroring the operation table: add, sub, mul, div, neg."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "neg":
        return -x
    raise ValueError(f"unknown op {op!r}")


def quad_sign(x):
    return x.sign()


def quad_floor(x):
    return x.floor()


def compare(x, y):
    """Sign of x - y, allowing the two values to carry different radicands."""
    if not x.m or not y.m or x.m == y.m:
        return (x - y).sign()
    u = QuadValue(x.a - y.a, x.b, x.m)
    v = QuadValue(0, -y.b, y.m)
    su, sv = u.sign(), v.sign()
    if su == 0 or su == sv:
        return sv if su == 0 else su
    if sv == 0:
        return su
    # opposite signs: the larger magnitude wins
    return su * (u * u - v.b * v.b * v.m).sign()


def floor_surd(p, s, n, q):
    """floor((p + s*sqrt(n)) / q) for integers p, s, q != 0 and n >= 0."""
    if q < 0:
        p, s, q = -p, -s, -q
    r = math.isqrt(s * s * n)
    if s < 0 and r * r != s * s * n:
        r += 1
    return (p + (r if s >= 0 else -r)) // q

"""Binary quadratic forms [A, B, C] and projective 2x2 integer matrices.

A matrix M acts on forms by M o Q = det(M) * Q(M^{-1}(X, Y)), which is the
same as Q(adj(M)(X, Y)) / det(M).  The action is invariant under rescaling
M, so half-turns such as S^(1/2) are carried by integer representatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvalidInput, SingularMatrix


def _num(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    if isinstance(x, bool):
        raise TypeError("bool is not a form coefficient")
    return x


@dataclass(frozen=True)
class Form:
    A: int
    B: int
    C: int

    def __post_init__(self):
        if not (type(self.A) is int and type(self.B) is int and type(self.C) is int):
            object.__setattr__(self, "A", _num(self.A))
            object.__setattr__(self, "B", _num(self.B))
            object.__setattr__(self, "C", _num(self.C))
        if self.A == 0 and self.B == 0 and self.C == 0:
            raise InvalidInput("the zero form")

    @classmethod
    def parse(cls, text: str) -> "Form":
        parts = [p.strip() for p in text.replace("[", "").replace("]", "").split(",")]
        if len(parts) != 3:
            raise InvalidInput(f"expected A,B,C but got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError as exc:
            raise InvalidInput(f"malformed form {text!r}") from exc

    def __iter__(self):
        yield self.A
        yield self.B
        yield self.C

    @property
    def is_integral(self):
        return type(self.A) is int and type(self.B) is int and type(self.C) is int

    @property
    def disc(self):
        return discriminant(self)

    def is_symmetric(self):
        return self.A + self.C == 0

    def __neg__(self):
        return Form(-self.A, -self.B, -self.C)

    def __str__(self):
        return f"[{self.A}, {self.B}, {self.C}]"

    def to_list(self):
        return [self.A, self.B, self.C]


@dataclass(frozen=True, eq=False)
class Mat:
    """2x2 integer matrix (a b; c d) compared up to nonzero scalars."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det == 0:
            raise SingularMatrix(f"singular matrix {self.rows()}")

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def trace(self):
        return self.a + self.d

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, other: "Mat") -> "Mat":
        return Mat(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def adj(self) -> "Mat":
        """Adjugate, the projective inverse."""
        return Mat(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "Mat":
        base = self if n >= 0 else self.adj()
        n = abs(n)
        out = IDENTITY
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def content(self):
        return math.gcd(math.gcd(self.a, self.b), math.gcd(self.c, self.d))

    def canonical(self) -> "Mat":
        """Content-free representative whose first nonzero entry is positive."""
        g = self.content()
        entries = [self.a // g, self.b // g, self.c // g, self.d // g]
        lead = next(x for x in entries if x)
        if lead < 0:
            entries = [-x for x in entries]
        return Mat(*entries)

    def scaled(self, k: int) -> "Mat":
        return Mat(k * self.a, k * self.b, k * self.c, k * self.d)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        # proportional iff all 2x2 minors of the 4-vectors vanish
        u = (self.a, self.b, self.c, self.d)
        v = (other.a, other.b, other.c, other.d)
        return all(u[i] * v[j] == u[j] * v[i] for i in range(4) for j in range(i + 1, 4))

    def exactly_equals(self, other: "Mat") -> bool:
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        c = self.canonical()
        return hash((c.a, c.b, c.c, c.d))

    def __repr__(self):
        return f"Mat({self.a}, {self.b}; {self.c}, {self.d})"


IDENTITY = Mat(1, 0, 0, 1)
S = Mat(0, -1, 1, 0)
# sqrt(2) * S^(1/2) and its inverse, in the convention S = (0, 1; -1, 0)
S_HALF = Mat(1, 1, -1, 1)
S_HALF_INV = Mat(1, -1, 1, 1)


def T(t: int = 1) -> Mat:
    return Mat(1, t, 0, 1)


def S_pm(s: int) -> Mat:
    """S_{+1} = (1, 0; 1, 1) and S_{-1} = (-1, 0; 1, -1)."""
    return Mat(s, 0, 1, s)


def s_half_power(a: int) -> Mat:
    return S_HALF if a > 0 else S_HALF_INV


def sign1(x) -> int:
    """Sign with the convention sign(0) = 1."""
    return -1 if x < 0 else 1


def inner_product(q1: Form, q2: Form):
    return q1.B * q2.B - 2 * (q1.A * q2.C + q2.A * q1.C)


def discriminant(q: Form):
    return q.B * q.B - 4 * q.A * q.C


def substitute(q: Form, m: Mat) -> Form:
    """Q(aX + bY, cX + dY)."""
    al, be, ga, de = m.a, m.b, m.c, m.d
    A, B, C = q.A, q.B, q.C
    return Form(
        A * al * al + B * al * ga + C * ga * ga,
        2 * A * al * be + B * (al * de + be * ga) + 2 * C * ga * de,
        A * be * be + B * be * de + C * de * de,
    )


def act(m: Mat, q: Form) -> Form:
    """M o Q, possibly rational when det(M) is not +-1."""
    det = m.det
    if det == 0:
        raise SingularMatrix("cannot act with a singular matrix")
    s = substitute(q, m.adj())
    if det in (1, -1):
        return Form(det * s.A, det * s.B, det * s.C)
    return Form(Fraction(s.A, det), Fraction(s.B, det), Fraction(s.C, det))


def primitive_part(q: Form):
    """Return (nu*Q, nu) with nu > 0 and nu*Q integral and primitive."""
    if q.is_integral:
        g = math.gcd(math.gcd(q.A, q.B), q.C)
        if g == 1:
            return q, Fraction(1)
        return Form(q.A // g, q.B // g, q.C // g), Fraction(1, g)
    coeffs = [Fraction(x) for x in q]
    den = 1
    for x in coeffs:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in coeffs]
    g = math.gcd(math.gcd(ints[0], ints[1]), ints[2])
    nu = Fraction(den, g)
    return Form(*(x // g for x in ints)), nu


def translation_apply(t: int, q: Form) -> Form:
    A, B, C = q.A, q.B, q.C
    return Form(A, B - 2 * A * t, A * t * t - B * t + C)


CASE_TAGS = ("c1", "c2", "c3", "c4", "c5", "cusp0", "cuspInf", "level1")


@dataclass(frozen=True)
class CycleStep:
    index: int
    form: Form
    code_matrix: Mat
    case_tag: str = "level1"
    # discriminant of the form at this step
    disc: Optional[int] = None
    # normalising translation of the form, where the step used one
    shift: Optional[int] = None

    def __post_init__(self):
        if self.case_tag not in CASE_TAGS:
            raise ValueError(f"unknown case tag {self.case_tag!r}")
        if self.code_matrix.det <= 0:
            raise ValueError("code matrices must have positive determinant")

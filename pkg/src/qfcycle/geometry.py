"""Points of the upper half-plane, geodesics of indefinite forms, and the
exact predicates used by the reduction algorithms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NotIndefinite, NotPositiveDefinite, SquareDiscriminant
from .exactnum import QuadValue, compare
from .forms import Form, Mat, act, discriminant, primitive_part

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class QuadPoint:
    """The point x + y*i with x rational and y**2 rational and positive.

    Storing y**2 keeps the set closed under integer Moebius maps.
    """

    x: Fraction
    y2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y2", Fraction(self.y2))
        if self.y2 <= 0:
            raise ValueError("point must lie in the upper half-plane")

    @classmethod
    def from_parts(cls, x, y_coeff, y_rad=1):
        y_coeff = Fraction(y_coeff)
        if y_coeff <= 0 or y_rad <= 0:
            raise ValueError("imaginary part must be positive")
        return cls(Fraction(x), y_coeff * y_coeff * y_rad)

    @classmethod
    def parse(cls, text: str) -> "QuadPoint":
        """Parse 'x,yc,yr' meaning x + yc*sqrt(yr)*i; fractions like -3/2 allowed."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) == 2:
            parts.append("1")
        if len(parts) != 3:
            raise ValueError(f"expected x,yc,yr but got {text!r}")
        return cls.from_parts(Fraction(parts[0]), Fraction(parts[1]), int(parts[2]))

    @property
    def y(self) -> QuadValue:
        return QuadValue.sqrt(self.y2)

    @property
    def y_coeff(self):
        y = self.y
        return y.a if y.is_rational else y.b

    @property
    def y_rad(self):
        y = self.y
        return 1 if y.is_rational else y.m

    def __complex__(self):
        return complex(float(self.x), math.sqrt(self.y2))

    def mobius(self, m: Mat) -> "QuadPoint":
        if m.det <= 0:
            raise ValueError("orientation-reversing matrix")
        a, b, c, d = m.a, m.b, m.c, m.d
        x, y2 = self.x, self.y2
        w2 = (c * x + d) ** 2 + c * c * y2
        re = ((a * x + b) * (c * x + d) + a * c * y2) / w2
        im2 = m.det ** 2 * y2 / (w2 * w2)
        return QuadPoint(re, im2)

    def translate(self, t) -> "QuadPoint":
        return QuadPoint(self.x + t, self.y2)

    def __str__(self):
        y = self.y
        ys = str(y.a) if y.is_rational else f"{y.b}*sqrt({y.m})"
        return f"{self.x} + {ys}*i"


I = QuadPoint(0, 1)
RHO_MINUS = QuadPoint(Fraction(-1, 2), Fraction(3, 4))
RHO_PLUS = QuadPoint(Fraction(1, 2), Fraction(3, 4))


def rho(s: int) -> QuadPoint:
    return RHO_PLUS if s > 0 else RHO_MINUS


def point_of_form(p: Form) -> QuadPoint:
    A, B, C = p.A, p.B, p.C
    if not (A > 0 and discriminant(p) < 0):
        raise NotPositiveDefinite(f"{p} is not positive definite")
    return QuadPoint(Fraction(-B, 2 * A), Fraction(4 * A * C - B * B, 4 * A * A))


def form_of_point(tau: QuadPoint) -> Form:
    return primitive_part(Form(1, -2 * tau.x, tau.x * tau.x + tau.y2))[0]


def _check_indefinite(q: Form):
    """D > 0 and A != 0, so gamma_Q is a semicircle; square D is fine here."""
    d = discriminant(q)
    if d <= 0:
        raise NotIndefinite(f"{q} is not indefinite")
    if q.A == 0:
        raise SquareDiscriminant(f"{q} has a vertical geodesic")
    return d


@dataclass(frozen=True)
class Geodesic:
    """Oriented geodesic; an endpoint of None stands for i*infinity."""

    start: Optional[QuadValue]
    end: Optional[QuadValue]
    owner: Optional[Form] = None

    def __post_init__(self):
        if self.start == self.end:
            raise ValueError("geodesic endpoints must differ")

    def reversed(self) -> "Geodesic":
        return Geodesic(self.end, self.start, self.owner)

    def mobius(self, m: Mat) -> "Geodesic":
        return Geodesic(_mobius_boundary(m, self.start), _mobius_boundary(m, self.end))


def _mobius_boundary(m: Mat, u):
    if u is None:
        return None if m.c == 0 else QuadValue(Fraction(m.a, m.c))
    den = u * m.c + m.d
    if den.sign() == 0:
        return None
    return (u * m.a + m.b) / den


def geodesic_of(q: Form) -> Geodesic:
    d = _check_indefinite(q)
    root = QuadValue.sqrt(d)
    two_a = 2 * q.A
    return Geodesic((-root - q.B) / two_a, (root - q.B) / two_a, q)


def vertical_geodesic(foot, downward=True) -> Geodesic:
    """{i*infinity, foot} when downward, else {foot, i*infinity}."""
    foot = QuadValue(foot) if not isinstance(foot, QuadValue) else foot
    return Geodesic(None, foot) if downward else Geodesic(foot, None)


def tip(q: Form):
    d = _check_indefinite(q)
    point = QuadPoint(Fraction(-q.B, 2 * q.A), Fraction(d, 4 * q.A * q.A))
    form = primitive_part(Form(2 * q.A * q.A, 2 * q.A * q.B, q.B * q.B - 2 * q.A * q.C))[0]
    return point, form


def _cyclic_between(p, lo, hi):
    """p strictly inside the arc of R u {inf} running upward from lo to hi."""

    def less(u, v):
        if u is None:
            return False
        if v is None:
            return True
        return compare(u, v) < 0

    if lo is None:
        return less(p, hi) if p is not None else False
    if hi is None:
        return p is None or less(lo, p)
    if less(lo, hi):
        return p is not None and less(lo, p) and less(p, hi)
    return p is None or less(lo, p) or less(p, hi)


def crossing_sign(g1: Geodesic, g2: Geodesic) -> int:
    """Intersection number: sign of det(g1'(P), g2'(P)) at the crossing P."""
    # the left side of g1 is the boundary arc running upward from end to start
    in1 = _cyclic_between(g2.start, g1.end, g1.start)
    in2 = _cyclic_between(g2.end, g1.end, g1.start)
    if in1 == in2:
        return 0
    if g2.start in (g1.start, g1.end) or g2.end in (g1.start, g1.end):
        return 0
    return 1 if in2 else -1


def crosses_sigma_positively(q: Form) -> bool:
    _check_indefinite(q)
    A, B, C = q.A, q.B, q.C
    if B <= 0:
        return False
    sa = -1 if A < 0 else 1
    return 2 * abs(A + C) < B or 2 * (A + C) == -sa * B


def _surd_sign(p: int, q: int, n: int) -> int:
    """Sign of p + q*sqrt(n) for integers, n >= 0."""
    sp, sq = (p > 0) - (p < 0), (q > 0) - (q < 0)
    if sq == 0 or n == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    diff = p * p - q * q * n
    return sp if diff > 0 else sq if diff < 0 else 0


def meets_F_interior(q: Form) -> bool:
    """Does gamma_Q meet {|x| < 1/2, x^2 + y^2 > 1}?"""
    d = _check_indefinite(q)
    A, B, C = q.A, q.B, q.C
    # positions are scaled by 2|A|: the ends of gamma_Q sit at b -+ sqrt(D),
    # the walls at -+a
    a = abs(A)
    b = -B if A > 0 else B
    if _surd_sign(b + a, 1, d) <= 0 or _surd_sign(a - b, 1, d) <= 0:
        return False
    # on the circle x^2 + y^2 - 1 has the sign of -A (B x + A + C), linear in x
    k = 2 * a * (A + C)
    sa = -1 if A > 0 else 1
    if _surd_sign(-a - b, 1, d) >= 0:
        lo = _surd_sign(-B * a + k, 0, d)
    else:
        lo = _surd_sign(B * b + k, -B, d)
    if _surd_sign(b - a, 1, d) >= 0:
        hi = _surd_sign(B * a + k, 0, d)
    else:
        hi = _surd_sign(B * b + k, B, d)
    return sa * lo > 0 or sa * hi > 0


def rho_on_geodesic(q: Form, s: int) -> bool:
    return 2 * (q.A + q.C) == -s * q.B


def point_on_geodesic(tau: QuadPoint, q: Form) -> bool:
    """A|tau|^2 + B x + C == 0, the exact circle test."""
    return q.A * (tau.x * tau.x + tau.y2) + q.B * tau.x + q.C == 0


def in_F_closure(tau: QuadPoint) -> bool:
    return abs(tau.x) <= HALF and tau.x * tau.x + tau.y2 >= 1


def in_F_prime(tau: QuadPoint) -> bool:
    """The half-open fundamental set: -1/2 <= x < 1/2, |tau| >= 1, x <= 0 on |tau| = 1."""
    n = tau.x * tau.x + tau.y2
    if not (-HALF <= tau.x < HALF) or n < 1:
        return False
    return n > 1 or tau.x <= 0


def hyp_distance(p: QuadPoint, q: QuadPoint) -> float:
    # (y1 - y2)^2 = y1^2 + y2^2 - 2 y1 y2 and y1 y2 = sqrt(y1^2 y2^2)
    prod = QuadValue.sqrt(p.y2 * q.y2)
    num = QuadValue((p.x - q.x) ** 2 + p.y2 + q.y2) - prod * 2
    cosh = 1 + float(num / (prod * 2))
    return math.acosh(max(cosh, 1.0))


def geodesic_through(p: QuadPoint, q: QuadPoint) -> Form:
    """Indefinite form whose geodesic contains both points, oriented from p to q.

    The form is orthogonal to the definite forms of p and q.  Returns a
    primitive form with rational (possibly square) discriminant; vertical
    carriers have A == 0.
    """
    u = (1, -2 * p.x, p.x * p.x + p.y2)
    v = (1, -2 * q.x, q.x * q.x + q.y2)
    # <Q, P> = B B' - 2(A C' + A' C) = 0 for P = [a, b, c] means
    # (A, B, C) . (-2c, b, -2a) = 0
    w1 = (-2 * u[2], u[1], -2 * u[0])
    w2 = (-2 * v[2], v[1], -2 * v[0])
    cross = (
        w1[1] * w2[2] - w1[2] * w2[1],
        w1[2] * w2[0] - w1[0] * w2[2],
        w1[0] * w2[1] - w1[1] * w2[0],
    )
    form = primitive_part(Form(*cross))[0]
    if form.A == 0:
        # vertical line x = p.x; orient by the imaginary parts
        want = -1 if q.y2 < p.y2 else 1
        # [0, B, C] runs from i*inf down when B > 0
        return form if (form.B > 0) == (want < 0) else -form
    want = 1 if q.x > p.x else -1
    return form if (form.A > 0) == (want > 0) else -form


def tile_meets_F_interior(q: Form, g: Mat) -> bool:
    """Does gamma_Q meet the interior of the tile g F?"""
    return meets_F_interior(primitive_part(act(g.adj(), q))[0])


__all__ = [
    "QuadPoint",
    "Geodesic",
    "I",
    "RHO_MINUS",
    "RHO_PLUS",
    "rho",
    "point_of_form",
    "form_of_point",
    "geodesic_of",
    "vertical_geodesic",
    "tip",
    "crossing_sign",
    "crosses_sigma_positively",
    "meets_F_interior",
    "rho_on_geodesic",
    "point_on_geodesic",
    "in_F_closure",
    "in_F_prime",
    "hyp_distance",
    "geodesic_through",
    "tile_meets_F_interior",
]

"""Pell solutions, fundamental units, automorphs and their square roots,
and the decomposition of a closed geodesic into regular segments."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import BasePointElliptic, InvalidDiscriminant, InvalidInput, NormPlusOne, SquareDiscriminant
from .exactnum import int_sqrt_exact
from .forms import Form, Mat, act, discriminant, primitive_part, s_half_power
from .geometry import QuadPoint, form_of_point, geodesic_through, point_on_geodesic, I


def _check_d(D: int):
    if D <= 0:
        raise InvalidInput(f"discriminant {D} must be positive")
    if int_sqrt_exact(D) is not None:
        raise SquareDiscriminant(f"{D} is a perfect square")


def pell_fundamental(D: int) -> Tuple[int, int]:
    """Least x, y > 0 with x^2 - D y^2 = 1, from the continued fraction of sqrt(D)."""
    _check_d(D)
    a0 = math.isqrt(D)
    m, d, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    while p * p - D * q * q != 1:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q


@dataclass(frozen=True)
class UnitData:
    """The unit (t + u sqrt(D)) / 2 of the order of discriminant D."""

    D: int
    t: int
    u: int
    norm: int

    def __mul__(self, other: "UnitData") -> "UnitData":
        D = self.D
        t = (self.t * other.t + D * self.u * other.u) // 2
        u = (self.t * other.u + self.u * other.t) // 2
        return UnitData(D, t, u, self.norm * other.norm)

    def __pow__(self, k: int) -> "UnitData":
        out = UnitData(self.D, 2, 0, 1)
        for _ in range(k):
            out = out * self
        return out

    def __float__(self):
        return (self.t + self.u * math.sqrt(self.D)) / 2


def fundamental_unit(D: int) -> UnitData:
    """Least unit > 1 of the order O_D, via the periodic expansion of (P0 + sqrt(D))/2."""
    _check_d(D)
    if D % 4 not in (0, 1):
        raise InvalidDiscriminant(f"{D} is not 0 or 1 mod 4")
    r = math.isqrt(D)
    # largest P0 < sqrt(D) with P0 = D mod 2, so alpha is reduced and purely periodic
    p0 = r if (r - D) % 2 == 0 else r - 1
    P, Q = p0, 2
    q_prev2, q_prev = 1, 0
    length = 0
    while True:
        a = (P + r) // Q
        q_prev2, q_prev = q_prev, a * q_prev + q_prev2
        length += 1
        P = a * Q - P
        Q = (D - P * P) // Q
        if (P, Q) == (p0, 2):
            break
    u = q_prev
    t = q_prev * p0 + 2 * q_prev2
    norm = (t * t - D * u * u) // 4
    assert norm in (1, -1) and norm == (-1) ** length
    return UnitData(D, t, u, norm)


def _check_form(q: Form) -> int:
    d = discriminant(q)
    if not q.is_integral:
        raise InvalidInput(f"{q} is not integral")
    _check_d(d)
    return d


def automorph(q: Form) -> Mat:
    D = _check_form(q)
    x, y = pell_fundamental(D)
    return Mat(x - q.B * y, -2 * q.C * y, 2 * q.A * y, x + q.B * y)


def _half_turn(q: Form, unit: UnitData) -> Mat:
    # 2 sqrt(D) times the matrix of the unit (t + u sqrt(D))/2 acting on gamma_Q
    D = discriminant(q)
    t, u = unit.t, unit.u
    return Mat(D * u - q.B * t, -2 * q.C * t, 2 * q.A * t, D * u + q.B * t)


def _root_unit(D: int) -> Optional[UnitData]:
    """The power of the fundamental unit whose square is the Pell unit, if it exists."""
    eps = fundamental_unit(D)
    if eps.norm == 1:
        return None
    x, y = pell_fundamental(D)
    eta = eps
    while True:
        sq = eta * eta
        if (sq.t, sq.u) == (2 * x, 2 * y):
            return eta
        if sq.u > 2 * y:
            return None
        eta = eta * eps * eps


def automorph_sqrt(q: Form) -> Optional[Mat]:
    """Integer K with K^2 = 4 D M_Q, or None when the unit has norm +1."""
    D = _check_form(q)
    eta = _root_unit(D)
    if eta is None:
        return None
    return _half_turn(q, eta)


def unit_half_turn(q: Form) -> Optional[Mat]:
    """The matrix of the fundamental unit itself, for norm -1 units."""
    D = _check_form(q)
    eps = fundamental_unit(D)
    if eps.norm == 1:
        return None
    return _half_turn(q, eps)


def lambda_and_length(q: Form):
    D = _check_form(q)
    x, y = pell_fundamental(D)
    log_lambda = math.log(x) + math.log1p(y / x * math.sqrt(D))
    return x, y, 2 * log_lambda


def automorph_levelN(q: Form, N: int):
    m = automorph(q)
    # search modulo N, then take the exact power
    r = Mat(m.a % N, m.b % N, m.c % N, m.d % N)
    p = r
    for n in range(1, 2 * N * N + 3):
        if p.b % N == 0:
            return m ** n, n
        p = p @ r
        p = Mat(p.a % N, p.b % N, p.c % N, p.d % N)
    raise AssertionError("order bound exceeded")


@dataclass(frozen=True)
class PathSegment:
    start: QuadPoint
    end: QuadPoint
    carrier: Form

    def __post_init__(self):
        if not (point_on_geodesic(self.start, self.carrier) and point_on_geodesic(self.end, self.carrier)):
            raise ValueError("segment endpoints must lie on the carrier")


def _segment(p: QuadPoint, q: QuadPoint) -> PathSegment:
    return PathSegment(p, q, geodesic_through(p, q))


def _stabiliser_in(h: Mat, N: Optional[int]) -> bool:
    """Is the half-turn about h^{-1} i in Gamma^0(N)?"""
    if N is None:
        return True
    from .leveln import in_gamma_upper

    return in_gamma_upper(h.adj() @ Mat(0, -1, 1, 0) @ h, N)


def _elliptic_frame(q: Form, tau0: QuadPoint, N: Optional[int]):
    """(b, H) with H b = i and H o Q symmetric, for the first elliptic point past tau0."""
    if N is None:
        from .cycles import cycle

        cyc = cycle(q, tau0)
        g = cyc.transform
        for step in cyc.steps:
            if step.form.is_symmetric():
                return I.mobius(g.adj()), g
            g = step.code_matrix @ g
        return None
    from .leveln import make_context, n_cycle

    cyc = n_cycle(q, make_context(N), tau0=tau0)
    g = cyc.transform
    for step in cyc.steps:
        if step.case_tag == "c4":
            h = Mat(1, step.shift, 0, 1) @ g
            return I.mobius(h.adj()), h
        g = step.code_matrix @ g
    return None


def regular_path_decomposition(q: Form, tau0: QuadPoint, N: Optional[int] = None) -> List[PathSegment]:
    D = _check_form(q)
    q = primitive_part(q)[0]
    if not point_on_geodesic(tau0, q):
        raise InvalidInput(f"{tau0} does not lie on the geodesic of {q}")
    base = form_of_point(tau0)
    if discriminant(base) == -4:
        h = _frame_to_i(tau0)
        if _stabiliser_in(h, N):
            raise BasePointElliptic(f"{tau0} is an elliptic point")
    frame = _elliptic_frame(q, tau0, N)
    m = automorph(q) if N is None else automorph_levelN(q, N)[0]
    if frame is None:
        return [_segment(tau0, tau0.mobius(m))]
    b, h = frame
    root = automorph_sqrt(q)
    if root is None:
        raise NormPlusOne(f"the fundamental unit of discriminant {D} has norm +1")
    if N is not None:
        root = root ** automorph_levelN(q, N)[1]
    local = act(h, q)
    partner_local = primitive_part(act(s_half_power(-1 if local.A < 0 else 1), local))[0]
    partner = primitive_part(act(h.adj(), partner_local))[0]
    turn = unit_half_turn(partner)
    if turn is None:
        raise NormPlusOne(f"the fundamental unit of discriminant {discriminant(partner)} has norm +1")
    b1 = b.mobius(root.adj())
    b2 = b.mobius(turn)
    return [_segment(tau0, b), _segment(b, b2), _segment(b1, tau0)]


def _frame_to_i(tau: QuadPoint) -> Mat:
    """An SL2(Z) matrix H with H tau = i, for tau of discriminant -4."""
    from .reduction import def_reduce

    return def_reduce(form_of_point(tau)).transform

"""Reduction and geometric coding for the congruence subgroup Gamma^0(N).

Gamma^0(N) consists of the SL2(Z) matrices whose upper-right entry is
divisible by N.  For an odd prime N its fundamental region is the union of
the N + 1 tiles S F and T^r F, |r| <= (N - 1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .cycles import Cycle, rotate_to
from .errors import (
    CuspProximal,
    EvenLevel,
    IterationCap,
    NotNormalisable,
    NotNReduced,
    NotPrime,
)
from .forms import IDENTITY, CycleStep, Form, Mat, S, T, act, discriminant, primitive_part, s_half_power, sign1
from .geometry import (
    QuadPoint,
    form_of_point,
    rho_on_geodesic,
    tile_meets_F_interior,
    tip,
)
from .exactnum import floor_surd
from .reduction import DEFAULT_CAP, def_reduce, delta, translation_apply


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class LevelContext:
    N: int
    R: Tuple[int, ...]
    C: Tuple[int, ...]
    transversal: Tuple[Mat, ...]
    sqrt_minus_one: Tuple[int, ...]

    def sym(self, k: int) -> int:
        """The representative of k mod N in C(N)."""
        h = (self.N - 1) // 2
        return (k + h) % self.N - h

    def inverse(self, s: int) -> int:
        """s* with s s* = 1 mod N, taken in C(N)."""
        if s % self.N == 0:
            raise ZeroDivisionError(f"{s} is not invertible mod {self.N}")
        return self.sym(pow(s, -1, self.N))


def make_context(N: int) -> LevelContext:
    if N % 2 == 0:
        raise EvenLevel(f"level {N} is even")
    if not _is_prime(N):
        raise NotPrime(f"level {N} is not prime")
    h = (N - 1) // 2
    res = tuple(range(-h, h + 1))
    trans = (S,) + tuple(T(r) for r in res)
    roots = tuple(k for k in res if (k * k + 1) % N == 0)
    return LevelContext(N, res, res, trans, roots)


def in_gamma_upper(m: Mat, N: int) -> bool:
    c = m.canonical()
    return c.det == 1 and c.b % N == 0


def reduce_point_levelN(tau: QuadPoint, ctx: LevelContext) -> Mat:
    """M in Gamma^0(N) with M tau in the region F_N."""
    m1 = def_reduce(form_of_point(tau)).transform
    if m1.d % ctx.N == 0:
        m2 = S
    else:
        m2 = T(ctx.sym(-m1.b * pow(m1.d, -1, ctx.N)))
    return m2 @ m1


def meets_FN_interior(q: Form, ctx: LevelContext) -> bool:
    return any(tile_meets_F_interior(q, g) for g in ctx.transversal)


def q_mt(q: Form, ctx: LevelContext, tau0: Optional[QuadPoint] = None) -> Tuple[Form, Mat]:
    """A Gamma^0(N)-equivalent form whose geodesic meets the interior of F_N."""
    if tau0 is None:
        tau0 = tip(q)[0]
    m = reduce_point_levelN(tau0, ctx)
    q1 = act(m, q)
    if meets_FN_interior(q1, ctx):
        return q1, m
    # the geodesic only touches F_N at a vertex rho_{+1} + s
    h = (ctx.N - 1) // 2
    for s in range(-h - 1, h + 2):
        if s % ctx.N == 0 or not rho_on_geodesic(translation_apply(-s, q1), 1):
            continue
        s2 = ctx.inverse(-s)
        g = T(s2) @ S @ T(-s)
        q2 = act(g, q1)
        if meets_FN_interior(q2, ctx):
            return q2, g @ m
    raise NotNormalisable(f"no form equivalent to {q} meets the interior of F_{ctx.N}")


def close_to_cusp_inf(q: Form, N: int) -> bool:
    A, B, C = q.A, q.B, q.C
    return 3 * abs(A) + sign1(A) * (4 * C + N * N * A) + 2 * N * B < 0


def close_to_cusp_zero(q: Form) -> bool:
    A, B, C = q.A, q.B, q.C
    return 3 * abs(C) + sign1(C) * (4 * A + C) - 2 * B < 0


def delta_N(q: Form) -> Optional[int]:
    """delta(Q), extended to 3A^2 <= D < 4A^2 by the J interval itself."""
    d = discriminant(q)
    if 3 * q.A * q.A > d:
        return None
    if d > 4 * q.A * q.A:
        return delta(q)
    # integers inside the closed interval [(B - aA -+ r)/(2A)], r = sqrt(D - 3A^2)
    A, B = q.A, q.B
    a = sign1(A)
    n = d - 3 * A * A
    s = -1 if A > 0 else 1  # sign of r at the lower end
    first = -floor_surd(a * A - B, -s, n, 2 * A)
    last = floor_surd(B - a * A, -s, n, 2 * A)
    hits = list(range(first, last + 1))
    return hits[0] if len(hits) == 1 else None


def _need(d: Optional[int], q: Form) -> int:
    if d is None:
        raise NotNormalisable(f"{q} has no normalising translation")
    return d


def cusp_step(q: Form, ctx: LevelContext):
    """(form, matrix, tag) for a form close to a cusp, else None."""
    N = ctx.N
    if close_to_cusp_inf(q, N):
        d = _need(delta_N(q), q)
        # nearest multiple of N; N odd so there are no ties
        k = round(Fraction(d, N)) * N
        return translation_apply(k, q), T(k), "cuspInf"
    if close_to_cusp_zero(q):
        sq = act(S, q)
        d = _need(delta_N(sq), sq)
        m = S @ T(d) @ S
        return act(m, q), m, "cusp0"
    return None


def n_normalize(q: Form, ctx: LevelContext) -> Tuple[Form, Mat]:
    step = cusp_step(q, ctx)
    if step is None:
        return q, IDENTITY
    return step[0], step[1]


def n_reduce(q: Form, ctx: LevelContext, tau0: Optional[QuadPoint] = None) -> Tuple[Form, Mat]:
    q1, m1 = q_mt(primitive_part(q)[0], ctx, tau0)
    q2, m2 = n_normalize(q1, ctx)
    return q2, m2 @ m1


def _tes(e: int, f: int) -> Mat:
    """T^e S T^f with S = (0, -1; 1, 0)."""
    return Mat(e, e * f - 1, 1, f)


def s_matrix_N(q: Form, ctx: LevelContext):
    """The local matrix and case number 1..5 for an N-reduced form away from the cusps."""
    if not meets_FN_interior(q, ctx):
        raise NotNReduced(f"{q} does not meet the interior of F_{ctx.N}")
    if close_to_cusp_inf(q, ctx.N) or close_to_cusp_zero(q):
        raise CuspProximal(f"{q} is close to a cusp")
    return _local_matrix(q, ctx)[:2]


def _local_matrix(q: Form, ctx: LevelContext):
    N = ctx.N
    a = sign1(q.A)
    d = delta_N(q)
    if d == 0 and rho_on_geodesic(q, a):
        # T^a S T^-a would leave Gamma^0(N); this is the case-3 matrix at d = 0
        return _tes(-a, -a), "c1", d
    # the vertex rho_a + a must be where the geodesic leaves, i.e. d = -a
    if d in (None, -a) and rho_on_geodesic(translation_apply(-a, q), a):
        return _tes(-a * (N + 1) // 2, -2 * a), "c2", d
    d = _need(d, q)
    if abs(d) != 1 and rho_on_geodesic(translation_apply(d, q), a):
        return _tes(ctx.inverse(d - a), d - a), "c3", d
    qd = translation_apply(d, q)
    if qd.is_symmetric() and (d * d + 1) % N == 0:
        return T(ctx.inverse(d)) @ s_half_power(a) @ T(d), "c4", d
    return _tes(ctx.inverse(d), d), "c5", d


def n_step(q: Form, ctx: LevelContext):
    """One step of the N-cycle: (next form, matrix, case tag, shift)."""
    cusp = cusp_step(q, ctx)
    if cusp is not None:
        return cusp + (None,)
    m, tag, d = _local_matrix(q, ctx)
    return primitive_part(act(m, q))[0], m, tag, d


def n_cycle(q: Form, ctx: LevelContext, cap: int = DEFAULT_CAP, tau0: Optional[QuadPoint] = None) -> Cycle:
    q = primitive_part(q)[0]
    q0, transform = n_reduce(q, ctx, tau0)
    steps: List[CycleStep] = []
    cur = q0
    while True:
        if len(steps) >= cap:
            raise IterationCap(
                f"{ctx.N}-cycle of {q} not closed after {cap} steps", Cycle(steps, False, ctx.N, transform)
            )
        nxt, m, tag, d = n_step(cur, ctx)
        steps.append(CycleStep(len(steps), cur, m, tag, discriminant(cur), d))
        cur = nxt
        if cur == q0:
            break
    if tau0 is None and q != q0 and any(s.form == q for s in steps):
        steps = rotate_to(steps, q)
        transform = IDENTITY
    return Cycle(steps, True, ctx.N, transform)

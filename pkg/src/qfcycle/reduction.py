"""Reduction of definite and indefinite forms.

Definite forms are reduced by the classical translate-and-flip loop.  An
indefinite form is reduced by moving a chosen base point of its geodesic
into the fundamental set, then translating so that the geodesic crosses
the bottom arc from rho_{-1} to rho_{+1} in the positive sense.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    IterationCap,
    NotNearlyReduced,
    NotNormalisable,
    NotPositiveDefinite,
    SquareDiscriminant,
    InvalidInput,
)
from .exactnum import QuadValue, floor_surd, int_sqrt_exact
from .forms import IDENTITY, Form, Mat, S, T, act, discriminant, translation_apply
from .geometry import (
    QuadPoint,
    crosses_sigma_positively,
    form_of_point,
    meets_F_interior,
    point_on_geodesic,
    tip,
)

DEFAULT_CAP = 10000


@dataclass(frozen=True)
class ReductionResult:
    reduced: Form
    transform: Mat
    steps: int = 0


def _check_definite(q: Form):
    if not (q.A > 0 and discriminant(q) < 0):
        raise NotPositiveDefinite(f"{q} is not positive definite")


def def_normalize(q: Form):
    _check_definite(q)
    t = -math.floor(Fraction(q.A - q.B, 2 * q.A))
    return translation_apply(t, q), t


def def_is_reduced(q: Form) -> bool:
    _check_definite(q)
    A, B, C = q.A, q.B, q.C
    if not (-A <= -B < A):
        return False
    return A < C or (A == C and -B <= 0)


def def_reduce(q: Form, cap: int = DEFAULT_CAP) -> ReductionResult:
    _check_definite(q)
    m = IDENTITY
    steps = 0
    while True:
        q, t = def_normalize(q)
        m = T(t) @ m
        if q.A < q.C or (q.A == q.C and q.B >= 0):
            return ReductionResult(q, m, steps)
        if steps >= cap:
            raise IterationCap("definite reduction did not terminate", ReductionResult(q, m, steps))
        q = act(S, q)
        m = S @ m
        steps += 1


def _check_indefinite(q: Form):
    d = discriminant(q)
    if d <= 0:
        raise InvalidInput(f"{q} is not indefinite")
    if int_sqrt_exact(d) is not None:
        raise SquareDiscriminant(f"{q} has square discriminant {d}")
    return d


def indef_is_reduced(q: Form) -> bool:
    return crosses_sigma_positively(q)


def nearly_reduced(q: Form) -> bool:
    return 3 * q.A * q.A <= discriminant(q)


def j_interval(q: Form):
    """Closed window of translations t for which T^t o Q can be reduced."""
    d = _check_indefinite(q)
    A, B = q.A, q.B
    if 3 * A * A > d:
        raise NotNearlyReduced(f"{q} is not nearly reduced")
    root = QuadValue.sqrt(d - 3 * A * A)
    half = Fraction(1, 2)

    def t(s, sign):
        return (root * sign + B) / (2 * A) + s * half

    if d > 4 * A * A:
        ends = (t(-1, -1), t(1, -1))
    else:
        a = -1 if A < 0 else 1
        ends = (t(-a, 1), t(-a, -1))
    return min(ends), max(ends)


def j_window(q: Form):
    """Integer hull [floor(lo), ceil(hi)] of the J interval, in integer arithmetic."""
    d = _check_indefinite(q)
    A, B = q.A, q.B
    n = d - 3 * A * A
    if n < 0:
        raise NotNearlyReduced(f"{q} is not nearly reduced")
    # t = (B + sign*sqrt(n) + s*A) / (2A)
    if d > 4 * A * A:
        ends = [(B - A, -1), (B + A, -1)]
    else:
        a = -1 if A < 0 else 1
        ends = [(B - a * A, 1), (B - a * A, -1)]
    floors = [floor_surd(p, s, n, 2 * A) for p, s in ends]
    ceils = [-floor_surd(-p, -s, n, 2 * A) for p, s in ends]
    return min(floors), max(ceils)


def delta(q: Form) -> Optional[int]:
    """The integer t with T^t o Q reduced, or None."""
    lo, hi = j_window(q)
    hits = [t for t in range(lo, hi + 1) if indef_is_reduced(translation_apply(t, q))]
    if len(hits) == 1:
        return hits[0]
    return None


def indef_reduce(q: Form, tau0: Optional[QuadPoint] = None) -> ReductionResult:
    _check_indefinite(q)
    if tau0 is None:
        tau0 = tip(q)[0]
    elif not point_on_geodesic(tau0, q):
        raise InvalidInput(f"{tau0} does not lie on the geodesic of {q}")
    m = def_reduce(form_of_point(tau0)).transform
    q1 = act(m, q)
    steps = 1
    if not meets_F_interior(q1):
        q1 = act(S, q1)
        m = S @ m
        steps += 1
    d = delta(q1) if nearly_reduced(q1) else None
    if d is None:
        raise NotNormalisable(f"no reduced translate of {q1}")
    return ReductionResult(translation_apply(d, q1), T(d) @ m, steps + 1)

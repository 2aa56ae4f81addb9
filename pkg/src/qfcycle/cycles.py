"""Level-1 geometric coding of a reduced indefinite form.

Each step moves the geodesic across the bottom arc of the fundamental
region with one of three local matrices, rescales to a primitive form and
translates back to a reduced form.  The sequence of composed matrices is
the code of the closed geodesic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .errors import IterationCap, NotNearlyReduced, NotNormalisable, NotReduced
from .forms import IDENTITY, CycleStep, Form, Mat, S, S_pm, T, act, discriminant, primitive_part, s_half_power
from .geometry import QuadPoint
from .reduction import DEFAULT_CAP, delta, indef_is_reduced, indef_reduce, translation_apply


@dataclass
class Cycle:
    steps: List[CycleStep]
    closed: bool
    level: int = 1
    # matrix taking the input form to the first form of the cycle
    transform: Mat = IDENTITY
    discriminants: List[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.discriminants:
            self.discriminants = [discriminant(s.form) for s in self.steps]

    @property
    def forms(self):
        return [s.form for s in self.steps]

    @property
    def matrices(self):
        return [s.code_matrix for s in self.steps]

    def __len__(self):
        return len(self.steps)

    def product(self) -> Mat:
        """M_{n-1} ... M_1 M_0, an automorph of the first form."""
        out = IDENTITY
        for s in self.steps:
            out = s.code_matrix @ out
        return out


def s_matrix(q: Form) -> Mat:
    if not indef_is_reduced(q):
        raise NotReduced(f"{q} is not reduced")
    A, B, C = q.A, q.B, q.C
    if A + C == 0:
        return s_half_power(-1 if A < 0 else 1)
    if 2 * (A + C) == B:
        return S_pm(1)
    if 2 * (A + C) == -B:
        return S_pm(-1)
    return S


def normalise(q: Form):
    try:
        d = delta(q)
    except NotNearlyReduced:
        d = None
    if d is None:
        raise NotNormalisable(f"{q} has no reduced translate")
    return translation_apply(d, q), d


def cycle_step(q: Form):
    m = s_matrix(q)
    p, _ = primitive_part(act(m, q))
    nxt, d = normalise(p)
    return nxt, T(d) @ m


def rotate_to(steps, start: Form):
    for k, s in enumerate(steps):
        if s.form == start:
            rolled = steps[k:] + steps[:k]
            return [CycleStep(i, s.form, s.code_matrix, s.case_tag, s.disc) for i, s in enumerate(rolled)]
    return steps


def cycle(q: Form, tau0: Optional[QuadPoint] = None, cap: int = DEFAULT_CAP) -> Cycle:
    q = primitive_part(q)[0]
    red = indef_reduce(q, tau0)
    q0 = red.reduced
    steps: List[CycleStep] = []
    cur = q0
    while True:
        if len(steps) >= cap:
            raise IterationCap(f"cycle of {q} not closed after {cap} steps", Cycle(steps, False, 1, red.transform))
        nxt, m = cycle_step(cur)
        steps.append(CycleStep(len(steps), cur, m, "level1", discriminant(cur)))
        cur = nxt
        if cur == q0:
            break
    transform = red.transform
    if tau0 is None and q != q0 and any(s.form == q for s in steps):
        steps = rotate_to(steps, q)
        transform = IDENTITY
    return Cycle(steps, True, 1, transform)

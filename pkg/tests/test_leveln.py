import random

import pytest

from conftest import random_indefinite
from fixtures import LEVEL5, LEVEL13, parabolic
from invariants import check_cycle
from qfcycle.errors import CuspProximal, EvenLevel, IterationCap, NotNReduced, NotPrime
from qfcycle.forms import Form, Mat, S, T, act, discriminant, primitive_part
from qfcycle.geometry import I, QuadPoint, in_F_closure, tip
from qfcycle.leveln import (
    close_to_cusp_inf,
    close_to_cusp_zero,
    delta_N,
    in_gamma_upper,
    make_context,
    meets_FN_interior,
    n_cycle,
    n_normalize,
    n_reduce,
    q_mt,
    reduce_point_levelN,
    s_matrix_N,
)
from qfcycle.serialize import CASE_LABELS

CTX = {N: make_context(N) for N in (3, 5, 7, 11, 13)}


def in_FN_closure(tau, ctx):
    return any(in_F_closure(tau.mobius(g.adj())) for g in ctx.transversal)


def test_context():
    c = CTX[13]
    assert c.R == tuple(range(-6, 7)) and len(c.transversal) == 14
    assert set(c.sqrt_minus_one) == {5, -5}
    assert set(CTX[5].sqrt_minus_one) == {2, -2}
    assert CTX[7].sqrt_minus_one == ()
    assert c.inverse(-4) == 3 and CTX[5].inverse(-2) == 2
    with pytest.raises(NotPrime):
        make_context(9)
    with pytest.raises(EvenLevel):
        make_context(4)
    with pytest.raises(EvenLevel):
        make_context(2)


def test_in_gamma_upper():
    assert in_gamma_upper(T(13), 13)
    for s in range(1, 13):
        s2 = (-pow(s, -1, 13)) % 13
        assert in_gamma_upper(Mat(s2, -s * s2 - 1, 1, -s), 13)
    assert not in_gamma_upper(T(1), 13)
    assert not in_gamma_upper(Mat(1, 1, 1, 2).scaled(1) @ Mat(1, 0, 0, 1).scaled(1) @ Mat(2, 0, 0, 1), 13)


def test_reduce_point():
    c = CTX[13]
    assert reduce_point_levelN(QuadPoint(0, 4), c) == Mat(1, 0, 0, 1)
    for tau in (tip(Form(-13, 108, -213))[0], I, QuadPoint(7, 1, ), QuadPoint(0, 1 / 100)):
        tau = QuadPoint(tau.x, tau.y2)
        m = reduce_point_levelN(tau, c)
        assert in_gamma_upper(m, 13)
        assert in_FN_closure(tau.mobius(m), c)


def test_meets_FN_interior():
    assert not meets_FN_interior(Form(-13, 108, -213), CTX[13])
    assert meets_FN_interior(Form(11, -70, 98), CTX[13])
    assert meets_FN_interior(Form(1, -1, -3), CTX[5])


def test_q_mt():
    q, m = q_mt(Form(-13, 108, -213), CTX[13])
    assert q == Form(11, -70, 98)
    assert m == T(3) @ S @ T(-4) and in_gamma_upper(m, 13)
    assert act(m, Form(-13, 108, -213)) == q


def test_cusp_predicates():
    assert close_to_cusp_inf(Form(2, -26, 11), 13)
    assert not close_to_cusp_inf(Form(11, -70, 98), 13)
    assert close_to_cusp_inf(Form(-1, -5, -3), 5)
    assert close_to_cusp_zero(Form(-6, 18, 11))
    assert not close_to_cusp_zero(Form(11, -70, 98))
    assert close_to_cusp_zero(Form(11, 18, -6))


def test_n_normalize():
    c = CTX[13]
    assert n_normalize(Form(2, -26, 11), c) == (Form(2, 26, 11), T(-13))
    assert n_normalize(Form(-6, 18, 11), c) == (Form(-13, -4, 11), Mat(1, 0, 1, 1))
    q = Form(11, -70, 98)
    assert n_normalize(q, c) == (q, Mat(1, 0, 0, 1))


def test_s_matrix_N():
    assert s_matrix_N(Form(11, -70, 98), CTX[13]) == (Mat(3, -13, 1, -4), "c5")
    assert s_matrix_N(Form(1, -1, -3), CTX[5]) == (Mat(-1, 5, -1, 3), "c4")
    assert s_matrix_N(Form(11, 70, 98), CTX[13]) == (Mat(-6, -13, 1, 2), "c3")
    with pytest.raises(NotNReduced):
        s_matrix_N(Form(-13, 108, -213), CTX[13])
    with pytest.raises(CuspProximal):
        s_matrix_N(Form(2, -26, 11), CTX[13])


def test_delta_N_extended_window():
    # 3A^2 <= D < 4A^2: J is a single interval
    q = Form(3, 2, -2)
    assert 3 * 9 <= discriminant(q) < 4 * 9
    # J = [(2 - 3 - 1)/6, (2 - 3 + 1)/6] = [-1/3, 0] holds only t = 0
    assert delta_N(q) == 0
    assert delta_N(Form(100, 1, -1)) is None


def test_n_reduce():
    assert n_reduce(Form(-13, 108, -213), CTX[13])[0] == Form(11, -70, 98)
    assert n_reduce(Form(1, -1, -3), CTX[5]) == (Form(1, -1, -3), Mat(1, 0, 0, 1))
    q, _ = n_reduce(Form(11, -70, 98), CTX[13])
    assert q == Form(11, -70, 98)


def rows(c):
    return [(s.form, s.code_matrix, CASE_LABELS[s.case_tag]) for s in c.steps]


def test_level13_table():
    c = n_cycle(Form(-13, 108, -213), CTX[13])
    assert c.closed and rows(c) == LEVEL13
    check_cycle(c, level_one=False)


def test_level5_table():
    c = n_cycle(Form(1, -1, -3), CTX[5])
    assert c.closed and rows(c) == LEVEL5
    check_cycle(c, level_one=False)


@pytest.mark.parametrize("N", [3, 5, 7, 11, 13])
def test_parabolic(N):
    c = n_cycle(Form(2, 2 * N, -1), CTX[N])
    assert [(s.form, s.code_matrix) for s in c.steps] == parabolic(N)
    assert [s.case_tag for s in c.steps] == ["cusp0", "cuspInf"]


def test_cap():
    with pytest.raises(IterationCap) as info:
        n_cycle(Form(1, -1, -3), CTX[5], cap=3)
    assert len(info.value.partial) == 3 and not info.value.partial.closed


def test_random_n_cycles():
    rng = random.Random(17)
    seen = {N: set() for N in (5, 7, 13)}
    count = 0
    while count < 100:
        q = random_indefinite(rng, 30)
        if discriminant(q) > 1000:
            continue
        count += 1
        for N in (5, 7, 13):
            ctx = CTX[N]
            c = n_cycle(q, ctx, cap=2000)
            check_cycle(c, level_one=False)
            for s in c.steps:
                seen[N].add(s.case_tag)
                if s.case_tag in ("c1", "c2", "c3", "c5", "cusp0", "cuspInf"):
                    assert in_gamma_upper(s.code_matrix.canonical(), N), (q, N, s)
                if s.case_tag.startswith("c") and not s.case_tag.startswith("cusp"):
                    assert meets_FN_interior(s.form, ctx)
                if s.case_tag == "c4":
                    assert N % 4 == 1
            # re-reducing a cycle form stays inside the same N-cycle
            forms = set(c.forms)
            for f in (c.steps[0].form, c.steps[-1].form):
                assert n_reduce(f, ctx)[0] in forms
    assert "c4" not in seen[7]
    assert {"c2", "c3", "c4", "c5", "cusp0", "cuspInf"} <= seen[13]


def test_step_soundness_under_primitive_part():
    c = n_cycle(Form(1, -1, -3), CTX[5])
    for k, s in enumerate(c.steps):
        nxt = c.steps[(k + 1) % len(c)].form
        assert primitive_part(act(s.code_matrix, s.form))[0] == nxt

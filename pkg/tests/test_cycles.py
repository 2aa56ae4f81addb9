import random

import pytest

from conftest import random_indefinite
from fixtures import LEVEL1_1_12, LEVEL1_5_9
from invariants import check_cycle
from qfcycle.cycles import cycle, cycle_step, s_matrix
from qfcycle.errors import IterationCap, NotReduced
from qfcycle.forms import Form, Mat, discriminant
from qfcycle.reduction import indef_is_reduced

TABLE_1_12 = LEVEL1_1_12
TABLE_5_9 = LEVEL1_5_9


@pytest.mark.parametrize(
    "q, m",
    [(Form(1, 12, -1), Mat(1, 1, -1, 1)), (Form(3, 5, -1), Mat(0, 1, -1, 0)), (Form(5, 9, -7), Mat(0, 1, -1, 0))],
)
def test_s_matrix(q, m):
    assert s_matrix(q) == m


def test_s_matrix_rejects_unreduced():
    with pytest.raises(NotReduced):
        s_matrix(Form(3, -1, -3))


@pytest.mark.parametrize(
    "q, nxt, m",
    [
        (Form(1, 12, -1), Form(3, 5, -1), Mat(2, 0, -1, 1)),
        (Form(-1, 5, 3), Form(3, 1, -3), Mat(-1, -1, 1, 0)),
        (Form(3, 1, -3), Form(1, 12, -1), Mat(13, -11, -1, 1)),
    ],
)
def test_cycle_step(q, nxt, m):
    assert cycle_step(q) == (nxt, m)


@pytest.mark.parametrize("q, table", [(Form(1, 12, -1), TABLE_1_12), (Form(5, 9, -7), TABLE_5_9)])
def test_cycle_tables(q, table):
    c = cycle(q)
    assert c.closed
    assert [(s.form, s.code_matrix) for s in c.steps] == table
    check_cycle(c)
    assert all(indef_is_reduced(f) for f in c.forms)


def test_cycle_from_unreduced_input():
    c = cycle(Form(3, -1, -3))
    assert set(c.forms) == {f for f, _ in TABLE_1_12}
    check_cycle(c)


def test_cycle_cap():
    with pytest.raises(IterationCap) as info:
        cycle(Form(1, 12, -1), cap=0)
    assert info.value.partial.closed is False and len(info.value.partial) == 0
    with pytest.raises(IterationCap) as info:
        cycle(Form(1, 12, -1), cap=2)
    assert [s.form for s in info.value.partial.steps] == [Form(1, 12, -1), Form(3, 5, -1)]


def test_random_cycles_close():
    rng = random.Random(7)
    count = 0
    while count < 200:
        q = random_indefinite(rng, 20)
        if discriminant(q) > 2000:
            continue
        c = cycle(q, cap=500)
        assert c.closed
        check_cycle(c)
        assert all(indef_is_reduced(f) for f in c.forms)
        count += 1

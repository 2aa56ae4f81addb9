import math
import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from qfcycle.exactnum import int_sqrt_exact
from qfcycle.forms import Form, Mat, S, T

settings.register_profile("qf", max_examples=60, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qf")


def is_good_indefinite(a, b, c):
    d = b * b - 4 * a * c
    return a != 0 and c != 0 and d > 0 and int_sqrt_exact(d) is None and math.gcd(math.gcd(a, b), c) == 1


def random_indefinite(rng: random.Random, bound: int = 40) -> Form:
    """A primitive indefinite form with non-square discriminant."""
    while True:
        a, b, c = (rng.randint(-bound, bound) for _ in range(3))
        if is_good_indefinite(a, b, c):
            return Form(a, b, c)


def random_word(rng: random.Random, length: int) -> Mat:
    m = Mat(1, 0, 0, 1)
    for _ in range(length):
        m = rng.choice([S, T(1), T(-1)]) @ m
    return m


def indefinite_forms(bound=40):
    """Valid forms drawn through a seed, so no generated input is rejected."""
    return st.integers(0, 2**32).map(lambda seed: random_indefinite(random.Random(seed), bound))


@st.composite
def sl2_words(draw, max_len=8):
    letters = draw(st.lists(st.sampled_from(["S", "T", "t"]), max_size=max_len))
    m = Mat(1, 0, 0, 1)
    for x in letters:
        m = {"S": S, "T": T(1), "t": T(-1)}[x] @ m
    return m


@pytest.fixture
def rng():
    return random.Random(20260101)

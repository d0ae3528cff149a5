import random

import pytest
from hypothesis import assume, settings
from hypothesis import strategies as st

from koutpoly.geom import GeometryError, validate_point_set

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

S5_POINTS = [(0, 0), (4, 0), (5, 3), (2, 5), (1, 1)]

# acceptance lines collected during the run, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def s5():
    return validate_point_set(S5_POINTS)


def random_point_set(rng: random.Random, n: int, hi: int = 100):
    while True:
        pts = [(rng.randint(0, hi), rng.randint(0, hi)) for _ in range(n)]
        try:
            return validate_point_set(pts)
        except GeometryError:
            continue


@st.composite
def point_sets(draw, min_n=4, max_n=7, hi=1000):
    n = draw(st.integers(min_n, max_n))
    pts = draw(
        st.lists(
            st.tuples(st.integers(-hi, hi), st.integers(-hi, hi)),
            min_size=n,
            max_size=n,
            unique=True,
        )
    )
    try:
        return validate_point_set(pts)
    except GeometryError:
        assume(False)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from degenfe import Poly

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=12),
)


@st.composite
def polys(draw, max_degree=6):
    coeffs = draw(st.lists(small_rationals, min_size=0, max_size=max_degree + 1))
    return Poly(coeffs)


def random_poly(rng: random.Random, max_degree: int = 10, bound: int = 100) -> Poly:
    deg = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(deg)]
    # keep the stated degree: top coefficient nonzero
    top = 0
    while top == 0:
        top = rng.randint(-bound, bound)
    return Poly(coeffs + [Fraction(top, rng.randint(1, bound))])


@pytest.fixture
def rng():
    return random.Random(1729)

from math import gcd

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from qgca.torus import ExchangeData

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@st.composite
def rank2_exchange(draw, max_d=3, max_b=2):
    """Random skew-symmetrizable rank-2 data with symbolic frozen coefficients."""
    d = (draw(st.integers(1, max_d)), draw(st.integers(1, max_d)))
    b12 = draw(st.integers(1, max_b)) * draw(st.sampled_from((1, -1)))
    b21 = -draw(st.integers(1, max_b)) * (1 if b12 > 0 else -1)
    # r_1 d_1 |b12| = r_2 d_2 |b21|
    g = gcd(d[0] * abs(b12), d[1] * abs(b21))
    r = (d[1] * abs(b21) // g, d[0] * abs(b12) // g)
    return ExchangeData(((0, b12), (b21, 0)), d, r)


@st.composite
def skew_symmetrizable(draw, n=3, max_d=3):
    """``b_ij = s_ij t_j`` with ``s`` skew-symmetric and ``t_i = r_i d_i``."""
    d = tuple(draw(st.integers(1, max_d)) for _ in range(n))
    r = tuple(draw(st.integers(1, 2)) for _ in range(n))
    t = [a * b for a, b in zip(r, d)]
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(st.integers(-1, 1))
            s[i][j], s[j][i] = v, -v
    B = tuple(tuple(s[i][j] * t[j] for j in range(n)) for i in range(n))
    return ExchangeData(B, d, r)


@pytest.fixture(scope="session")
def example():
    from qgca.example import EXAMPLE

    return EXAMPLE


@pytest.fixture(scope="session")
def example_seeds():
    from qgca.example import example_sequence

    return example_sequence(12).seeds()


def random_rank2(rng, max_d=3, max_b=2):
    d = (rng.randint(1, max_d), rng.randint(1, max_d))
    b12 = rng.randint(1, max_b) * rng.choice((1, -1))
    b21 = -rng.randint(1, max_b) * (1 if b12 > 0 else -1)
    g = gcd(d[0] * abs(b12), d[1] * abs(b21))
    r = (d[1] * abs(b21) // g, d[0] * abs(b12) // g)
    return ExchangeData(((0, b12), (b21, 0)), d, r)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

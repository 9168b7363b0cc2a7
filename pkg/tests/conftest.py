import random

import pytest
from hypothesis import strategies as st

from milnorkit.poly import Polynomial, Ring


@pytest.fixture
def xy():
    return Ring(["x", "y"])


@pytest.fixture
def xyz():
    return Ring(["x", "y", "z"])


def random_poly(rng: random.Random, ring: Ring, terms=4, max_exp=3, coeff=5, constant=True):
    out = {}
    for _ in range(terms):
        m = tuple(rng.randint(0, max_exp) for _ in range(ring.dimension))
        if not constant and not any(m):
            continue
        out[m] = out.get(m, 0) + rng.randint(-coeff, coeff)
    return Polynomial(ring, out)


def polynomials(ring: Ring, max_terms=5, max_exp=3, rational=True):
    exps = st.tuples(*[st.integers(0, max_exp)] * ring.dimension)
    if rational:
        coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=7)
    else:
        coeffs = st.integers(-9, 9)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: Polynomial(ring, d))


ACCEPTANCE_LINES = []


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    """Remember a criterion outcome; printed in the terminal summary."""
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)

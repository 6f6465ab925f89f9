from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from stochrat import ALL_TYPES, BudgetPair, ChoiceProbabilities, PopulationDistribution


def random_simplex(rng, k, max_denominator=60, sparsity=0.3):
    """Random exact point on the k-simplex; some coordinates forced to zero."""
    while True:
        weights = rng.integers(0, max_denominator, size=k)
        weights[rng.random(k) < sparsity] = 0
        total = int(weights.sum())
        if total > 0:
            return [Fraction(int(w), total) for w in weights]


def random_choice_probabilities(rng):
    return ChoiceProbabilities(random_simplex(rng, 3) + random_simplex(rng, 3))


def random_population(rng, types=ALL_TYPES, **kw):
    weights = random_simplex(rng, len(types), **kw)
    return PopulationDistribution(dict(zip(types, weights)))


def corner_choice_probabilities():
    """Every pair of budget-wise point masses plus every two-point pair within a budget."""
    units = [tuple(Fraction(int(i == r)) for i in range(3)) for r in range(3)]
    halves = [
        tuple(Fraction(1, 2) if i in pair else Fraction(0) for i in range(3))
        for pair in combinations(range(3), 2)
    ]
    blocks = units + halves
    return [ChoiceProbabilities(a + b) for a in blocks for b in blocks]


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)


@pytest.fixture
def pair():
    return BudgetPair.from_prices((2, 1), (1, 2))


ACCEPTANCE_RESULTS = []


def pytest_runtest_makereport(item, call):
    criterion = getattr(item.function, "criterion", None)
    if criterion is not None and call.when == "call":
        ACCEPTANCE_RESULTS.append((criterion, call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion[1]}")

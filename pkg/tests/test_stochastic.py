import itertools
from fractions import Fraction

import numpy as np
import pytest
from conftest import corner_choice_probabilities, random_choice_probabilities, random_simplex
from scipy.optimize import linprog

from stochrat import (
    ChoiceProbabilities,
    RationalMixture,
    axiom_check,
    axiom_lhs,
    solve_mixture,
    verify_mixture,
)
from stochrat._lp import feasible_point
from stochrat.stochastic import MIXTURE_MATRIX

F = Fraction
EXAMPLE_PI = ChoiceProbabilities(["9/10", "1/10", 0, "1/10", "9/10", 0])
EXAMPLE_MU = RationalMixture({"1,1": "1/10", "1,2": "8/10", "2,2": "1/10"})


def grid_search_mixture(pi, resolution):
    """Every mixture on the grid ``{0, 1/res, ..., 1}^6`` that solves the system exactly."""
    hits = []
    for cuts in itertools.combinations(range(resolution + 5), 5):
        parts, prev = [], -1
        for c in cuts:
            parts.append(c - prev - 1)
            prev = c
        parts.append(resolution + 4 - prev)
        mu = RationalMixture([F(p, resolution) for p in parts])
        if verify_mixture(mu, pi):
            hits.append(mu)
    return hits


def test_matrix_matches_printed_system():
    assert MIXTURE_MATRIX == (
        (1, 1, 0, 1, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 1, 1),
        (1, 0, 0, 0, 0, 0),
        (0, 1, 1, 0, 1, 0),
        (0, 0, 0, 1, 0, 1),
    )


class TestChoiceProbabilities:
    def test_rejects_bad_sums(self):
        with pytest.raises(ValueError):
            ChoiceProbabilities([1, 0, 0, 0, 0, 0])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ChoiceProbabilities([2, -1, 0, 1, 0, 0])

    def test_from_values_renormalizes_floats(self):
        pi = ChoiceProbabilities.from_values([0.1, 0.2, 0.7, 0.5, 0.5, 0.0])
        assert sum(pi.budget(1)) == 1
        assert float(pi["2|1"]) == pytest.approx(0.2)

    def test_from_values_tolerance(self):
        with pytest.raises(ValueError):
            ChoiceProbabilities.from_values([0.1, 0.2, 0.71, 0.5, 0.5, 0.0])


class TestAxiom:
    def test_example(self):
        assert axiom_check(EXAMPLE_PI)

    def test_crossed_regions(self):
        pi = ChoiceProbabilities([0, 1, 0, 1, 0, 0])
        assert axiom_lhs(pi) == 2
        assert not axiom_check(pi)

    def test_all_at_intersection(self):
        assert axiom_check(ChoiceProbabilities([0, 0, 1, 0, 0, 1]))

    def test_region3_free_reduces_to_region1_comparison(self, rng):
        for _ in range(2000):
            a = random_simplex(rng, 2)
            b = random_simplex(rng, 2)
            pi = ChoiceProbabilities([a[0], a[1], 0, b[0], b[1], 0])
            assert axiom_check(pi) == (pi["1|1"] >= pi["1|2"]) == (pi["2|1"] <= pi["2|2"])


class TestSolveMixture:
    def test_example_feasible(self):
        mu = solve_mixture(EXAMPLE_PI)
        assert mu is not None and verify_mixture(mu, EXAMPLE_PI)
        assert verify_mixture(EXAMPLE_MU, EXAMPLE_PI)

    def test_single_type(self):
        mu = solve_mixture(ChoiceProbabilities([1, 0, 0, 0, 1, 0]))
        assert mu["1,2"] == 1

    def test_infeasible(self):
        pi = ChoiceProbabilities([0, 1, 0, 1, 0, 0])
        assert solve_mixture(pi) is None
        assert grid_search_mixture(pi, 20) == []

    def test_grid_oracle_sees_example_solution(self):
        # Sanity check on the oracle itself: it must find the known mixture.
        assert EXAMPLE_MU in grid_search_mixture(EXAMPLE_PI, 10)

    def test_deterministic(self):
        assert solve_mixture(EXAMPLE_PI) == solve_mixture(EXAMPLE_PI)

    def test_equivalence_with_axiom_on_corners(self):
        cases = corner_choice_probabilities()
        assert len(cases) == 36
        for pi in cases:
            mu = solve_mixture(pi)
            assert axiom_check(pi) == (mu is not None), pi
            if mu is not None:
                assert verify_mixture(mu, pi)

    def test_equivalence_with_axiom_random(self, rng):
        for _ in range(2000):
            pi = random_choice_probabilities(rng)
            mu = solve_mixture(pi)
            assert axiom_check(pi) == (mu is not None), pi
            if mu is not None:
                assert verify_mixture(mu, pi)

    def test_agrees_with_floating_lp(self, rng):
        """Cross-check feasibility against an independent LP solver away from the boundary."""
        A = np.array(MIXTURE_MATRIX, dtype=float)
        checked = 0
        for _ in range(400):
            pi = random_choice_probabilities(rng)
            if abs(axiom_lhs(pi) - 1) < F(1, 1000):
                continue
            res = linprog(np.zeros(6), A_eq=A, b_eq=[float(v) for v in pi.pi], bounds=[(0, None)] * 6)
            assert (res.status == 0) == (solve_mixture(pi) is not None)
            checked += 1
        assert checked > 300


class TestVerifyMixture:
    def test_wrong_mixture(self):
        pi = ChoiceProbabilities([1, 0, 0, 0, 1, 0])
        assert verify_mixture(RationalMixture({"1,2": 1}), pi)
        assert not verify_mixture(RationalMixture({"1,1": 1}), pi)

    def test_mixture_rejects_irrational_types(self):
        with pytest.raises(ValueError):
            RationalMixture({"2,1": 1})


class TestFeasiblePoint:
    def test_small_system(self):
        x = feasible_point([[1, 1], [1, -1]], [2, 0])
        assert x == [1, 1]

    def test_negative_rhs(self):
        assert feasible_point([[-1, -1]], [-3]) is not None

    def test_infeasible(self):
        assert feasible_point([[1, 1], [1, 1]], [1, 2]) is None

from fractions import Fraction
from itertools import combinations

import pytest
from conftest import random_population

from stochrat import (
    ALL_TYPES,
    IRRATIONAL_TYPES,
    NO_REGION3_TYPES,
    PopulationDistribution,
    Region3MassPresent,
    axiom_check,
    classify_no_region3,
    classify_population,
    explain_population,
    induced_probabilities,
    sufficient_condition,
)

F = Fraction
EXAMPLE_NU = PopulationDistribution({"1,2": "9/10", "2,1": "1/10"})
UNIFORM9 = PopulationDistribution.uniform()


class TestInducedProbabilities:
    def test_example(self):
        assert induced_probabilities(EXAMPLE_NU).pi == (F(9, 10), F(1, 10), 0, F(1, 10), F(9, 10), 0)

    def test_point_mass(self):
        assert induced_probabilities(PopulationDistribution.point_mass((3, 3))).pi == (0, 0, 1, 0, 0, 1)

    def test_uniform(self):
        assert induced_probabilities(UNIFORM9).pi == (F(1, 3),) * 6


class TestClassifyPopulation:
    def test_example(self):
        assert classify_population(EXAMPLE_NU)

    def test_all_theta21(self):
        assert not classify_population(PopulationDistribution.point_mass((2, 1)))

    def test_uniform_boundary(self):
        v = explain_population(UNIFORM9)
        assert v.rationalizable
        assert v.branch == "region3_budget1_le_budget2"
        assert (v.region3_budget1, v.region3_budget2, v.lhs, v.rhs) == (F(1, 3),) * 4

    def test_second_branch(self):
        nu = PopulationDistribution({"3,1": "1/2", "1,1": "1/2"})
        v = explain_population(nu)
        assert v.branch == "region3_budget1_gt_budget2"
        # region-1 mass on budget 2 is 1, on budget 1 is 1/2
        assert (v.lhs, v.rhs, v.rationalizable) == (1, F(1, 2), False)


class TestNoRegion3:
    def test_example(self):
        assert classify_no_region3(EXAMPLE_NU)

    def test_tie(self):
        assert classify_no_region3(PopulationDistribution({"2,1": "1/2", "1,2": "1/2"}))

    def test_reject(self):
        assert not classify_no_region3(PopulationDistribution({"2,1": "0.6", "1,1": "0.4"}))

    def test_requires_no_region3(self):
        with pytest.raises(Region3MassPresent):
            classify_no_region3(UNIFORM9)


class TestPopulationDistribution:
    def test_must_sum_to_one(self):
        with pytest.raises(ValueError):
            PopulationDistribution({"1,2": "1/2"})

    def test_float_input_renormalized(self):
        nu = PopulationDistribution({"1,2": 0.9, "2,1": 0.1})
        assert sum(nu.nu) == 1

    def test_sequence_input(self):
        nu = PopulationDistribution([0, 1, 0, 0, 0, 0, 0, 0, 0])
        assert nu[1, 2] == 1


def enumerated_populations():
    """All point masses and all two-type mixtures at weights 1/4, 1/2, 3/4."""
    out = [PopulationDistribution.point_mass(t) for t in ALL_TYPES]
    for a, b in combinations(ALL_TYPES, 2):
        for w in (F(1, 4), F(1, 2), F(3, 4)):
            out.append(PopulationDistribution({a: w, b: 1 - w}))
    return out


def test_theorem_matches_axiom_enumerated():
    cases = enumerated_populations()
    assert len(cases) == 9 + 36 * 3
    for nu in cases:
        assert classify_population(nu) == axiom_check(induced_probabilities(nu)), nu


def test_theorem_matches_axiom_random(rng):
    for _ in range(3000):
        nu = random_population(rng)
        assert classify_population(nu) == axiom_check(induced_probabilities(nu)), nu


def test_shortcut_matches_theorem(rng):
    for _ in range(2000):
        nu = random_population(rng, NO_REGION3_TYPES)
        assert classify_no_region3(nu) == classify_population(nu)


class TestSufficientConditions:
    def test_majority_theta12_accepts(self, rng):
        for _ in range(1000):
            rest = random_population(rng)
            w = F(int(rng.integers(50, 101)), 100)
            nu = PopulationDistribution({t: (1 - w) * v + (w if t == (1, 2) else 0) for t, v in rest.as_dict().items()})
            assert nu[1, 2] >= F(1, 2)
            assert sufficient_condition(nu) == "majority_theta12"
            assert classify_population(nu)

    def test_majority_theta21_rejects(self, rng):
        for _ in range(1000):
            rest = random_population(rng)
            w = F(int(rng.integers(51, 101)), 100)
            nu = PopulationDistribution({t: (1 - w) * v + (w if t == (2, 1) else 0) for t, v in rest.as_dict().items()})
            assert sufficient_condition(nu) == "majority_theta21"
            assert not classify_population(nu)

    def test_all_irrational_rejects(self, rng):
        for _ in range(1000):
            nu = random_population(rng, IRRATIONAL_TYPES)
            assert sufficient_condition(nu) in ("all_irrational", "majority_theta21")
            assert not classify_population(nu)

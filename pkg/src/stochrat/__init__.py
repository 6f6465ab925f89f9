"""Deterministic vs. stochastic rationalizability with two goods and two budgets."""

from .errors import (
    EmptySample,
    InstanceTooLarge,
    NonOverlappingBudgets,
    OffBudgetLine,
    Region3MassPresent,
    StochratError,
)
from .geometry import (
    ALL_TYPES,
    IRRATIONAL_TYPES,
    NO_REGION3_TYPES,
    RATIONAL_TYPES,
    Budget,
    BudgetPair,
    Bundle,
    DemandType,
    DeterministicDataset,
    canonical_bundle,
    check_sarp,
    classify_region,
    demand_type_of,
    intersection_bundle,
    is_rational_type,
    sarp_violations,
)
from .population import (
    PopulationDistribution,
    PopulationVerdict,
    classify_no_region3,
    classify_population,
    explain_population,
    induced_probabilities,
    sufficient_condition,
)
from .power import (
    TABLE2_POPULATIONS,
    TABLE2_SIZES,
    BinaryMarginals,
    PowerResult,
    marginals_of,
    power_brute_force,
    power_closed_form,
    power_monte_carlo,
    reproduce_table2,
)
from .sampling import (
    SampleCounts,
    SampleWeights,
    counts_to_probabilities,
    cross_section_probabilities,
    multinomial_draw,
    observed_probabilities,
    panel_probabilities,
)
from .stochastic import (
    ChoiceProbabilities,
    RationalMixture,
    axiom_check,
    axiom_lhs,
    solve_mixture,
    verify_mixture,
)

__version__ = "0.1.0"

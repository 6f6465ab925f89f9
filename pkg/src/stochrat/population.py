"""Classification of whole populations of demand types (no sampling error)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .errors import Region3MassPresent
from .geometry import ALL_TYPES, IRRATIONAL_TYPES, DemandType, Number, parse_type, to_fraction
from .stochastic import ChoiceProbabilities


def type_vector(weights) -> tuple[tuple[Fraction, ...], bool]:
    """Nine weights in :data:`ALL_TYPES` order from a mapping or a sequence.

    Mapping keys may be anything :func:`parse_type` accepts; missing types get
    zero. Returns the weights and whether every input was exact.
    """
    if isinstance(weights, Mapping):
        parsed = {}
        exact = True
        for key, value in weights.items():
            theta = parse_type(key)
            if theta in parsed:
                raise ValueError(f"duplicate entry for {theta}")
            parsed[theta], e = to_fraction(value)
            exact = exact and e
        values = tuple(parsed.get(t, Fraction(0)) for t in ALL_TYPES)
    else:
        converted = [to_fraction(v) for v in weights]
        if len(converted) != 9:
            raise ValueError(f"expected 9 type weights, got {len(converted)}")
        values = tuple(v for v, _ in converted)
        exact = all(e for _, e in converted)
    if any(v < 0 for v in values):
        raise ValueError("type weights must be nonnegative")
    return values, exact


@dataclass(frozen=True, init=False)
class PopulationDistribution:
    """Probabilities of all nine demand types.

    Accepts a mapping such as ``{(1, 2): "9/10", "2,1": "1/10"}`` or nine
    values in :data:`ALL_TYPES` order. Inexact input (floats) is accepted
    if it sums to one within ``tol`` and is then renormalized exactly.
    """

    nu: tuple[Fraction, ...]

    def __init__(self, weights, tol: float = 1e-9):
        values, exact = type_vector(weights)
        total = sum(values)
        if exact:
            if total != 1:
                raise ValueError(f"population weights sum to {total}, not 1")
        else:
            if abs(total - 1) > tol:
                raise ValueError(f"population weights sum to {float(total)}, not 1")
            values = tuple(v / total for v in values)
        object.__setattr__(self, "nu", values)

    @classmethod
    def point_mass(cls, theta) -> PopulationDistribution:
        return cls({parse_type(theta): 1})

    @classmethod
    def uniform(cls, types=ALL_TYPES) -> PopulationDistribution:
        types = [parse_type(t) for t in types]
        return cls({t: Fraction(1, len(types)) for t in types})

    def __getitem__(self, theta) -> Fraction:
        return self.nu[ALL_TYPES.index(parse_type(theta))]

    def as_dict(self) -> dict[DemandType, Fraction]:
        return dict(zip(ALL_TYPES, self.nu))

    def support(self) -> list[DemandType]:
        return [t for t, v in zip(ALL_TYPES, self.nu) if v > 0]

    def region_mass(self, t: int, r: int) -> Fraction:
        """Mass of types choosing region ``r`` on budget ``t``."""
        return sum((v for theta, v in zip(ALL_TYPES, self.nu) if theta.region(t) == r), Fraction(0))

    def has_region3_mass(self) -> bool:
        return any(3 in theta for theta in self.support())

    @property
    def irrational_mass(self) -> Fraction:
        return sum((self[t] for t in IRRATIONAL_TYPES), Fraction(0))


def induced_probabilities(nu: PopulationDistribution) -> ChoiceProbabilities:
    """Region probabilities generated by sampling the whole population."""
    return ChoiceProbabilities([nu.region_mass(t, r) for t in (1, 2) for r in (1, 2, 3)])


@dataclass(frozen=True)
class PopulationVerdict:
    """Outcome of the population test with the quantities behind it.

    ``branch`` is ``"region3_budget1_le_budget2"`` when budget 1 has no more
    intersection mass than budget 2; the test then needs
    ``region2_budget1 <= region2_budget2`` (``lhs`` and ``rhs``). Otherwise
    ``branch`` is ``"region3_budget1_gt_budget2"`` and the test needs
    ``region1_budget2 <= region1_budget1``.
    """

    rationalizable: bool
    branch: str
    region3_budget1: Fraction
    region3_budget2: Fraction
    lhs: Fraction
    rhs: Fraction
    sufficient_condition: Optional[str] = None

    def explanation(self) -> str:
        rel = "<=" if self.rationalizable else ">"
        if self.branch == "region3_budget1_le_budget2":
            head = f"region-3 mass {self.region3_budget1} <= {self.region3_budget2}"
            body = f"region-2 mass on budget 1 vs budget 2: {self.lhs} {rel} {self.rhs}"
        else:
            head = f"region-3 mass {self.region3_budget1} > {self.region3_budget2}"
            body = f"region-1 mass on budget 2 vs budget 1: {self.lhs} {rel} {self.rhs}"
        return f"{head}; {body}"


def sufficient_condition(nu: PopulationDistribution) -> Optional[str]:
    """Name of a shortcut that already decides ``nu``, if any.

    ``"majority_theta12"``: at least half the mass on theta(1,2), always accepted.
    ``"majority_theta21"``: more than half on theta(2,1), always rejected.
    ``"all_irrational"``: support inside the irrational types, always rejected.
    """
    if nu[1, 2] >= Fraction(1, 2):
        return "majority_theta12"
    if nu[2, 1] > Fraction(1, 2):
        return "majority_theta21"
    if all(t in IRRATIONAL_TYPES for t in nu.support()):
        return "all_irrational"
    return None


def explain_population(nu: PopulationDistribution) -> PopulationVerdict:
    a, b = nu.region_mass(1, 3), nu.region_mass(2, 3)
    if a <= b:
        branch, lhs, rhs = "region3_budget1_le_budget2", nu.region_mass(1, 2), nu.region_mass(2, 2)
    else:
        branch, lhs, rhs = "region3_budget1_gt_budget2", nu.region_mass(2, 1), nu.region_mass(1, 1)
    return PopulationVerdict(lhs <= rhs, branch, a, b, lhs, rhs, sufficient_condition(nu))


def classify_population(nu: PopulationDistribution) -> bool:
    """Whether the population's aggregate choices are stochastically rationalized.

    Works directly on type masses, without forming region probabilities.
    """
    return explain_population(nu).rationalizable


def classify_no_region3(nu: PopulationDistribution) -> bool:
    """Shortcut for populations that never choose the intersection point."""
    if nu.has_region3_mass():
        raise Region3MassPresent("population puts mass on a type choosing region 3")
    return nu[2, 1] <= nu[1, 2]

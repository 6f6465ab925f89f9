"""Stochastic rationalizability of region choice probabilities.

A pair of region distributions is stochastically rationalized when it is a
mixture of the six rationalizable demand types. Two independent routes
decide this: the closed-form inequality in :func:`axiom_check` and exact
feasibility of the mixture system in :func:`solve_mixture`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from ._lp import feasible_point
from .geometry import RATIONAL_TYPES, DemandType, Number, parse_type, to_fraction

REGION_LABELS = ("1|1", "2|1", "3|1", "1|2", "2|2", "3|2")

# Row "r|t" has a one in the column of every rational type choosing region r on budget t.
MIXTURE_MATRIX: tuple[tuple[int, ...], ...] = tuple(
    tuple(int(theta.region(t) == r) for theta in RATIONAL_TYPES)
    for t in (1, 2)
    for r in (1, 2, 3)
)


@dataclass(frozen=True, init=False)
class ChoiceProbabilities:
    """Region probabilities ``(pi^{1|1}, pi^{2|1}, pi^{3|1}, pi^{1|2}, pi^{2|2}, pi^{3|2})``.

    The constructor is exact: both budget blocks must sum to one.
    Use :meth:`from_values` for float or approximately normalized input.
    """

    pi: tuple[Fraction, ...]

    def __init__(self, pi: Iterable[Number]):
        values = tuple(to_fraction(v)[0] for v in pi)
        if len(values) != 6:
            raise ValueError(f"expected 6 region probabilities, got {len(values)}")
        if any(v < 0 or v > 1 for v in values):
            raise ValueError(f"probabilities must lie in [0, 1]: {values}")
        for t in (0, 1):
            if sum(values[3 * t:3 * t + 3]) != 1:
                raise ValueError(f"budget {t + 1} probabilities do not sum to 1")
        object.__setattr__(self, "pi", values)

    @classmethod
    def from_values(cls, values: Iterable[Number], tol: float = 1e-9) -> ChoiceProbabilities:
        """Build from possibly inexact input, renormalizing each budget block.

        Raises ``ValueError`` if an entry is negative or a block sum is off by
        more than ``tol``.
        """
        vals = [to_fraction(v)[0] for v in values]
        if len(vals) != 6:
            raise ValueError(f"expected 6 region probabilities, got {len(vals)}")
        if any(v < 0 for v in vals):
            raise ValueError("probabilities must be nonnegative")
        out = []
        for t in (0, 1):
            block = vals[3 * t:3 * t + 3]
            total = sum(block)
            if abs(total - 1) > tol:
                raise ValueError(f"budget {t + 1} probabilities sum to {float(total)}, not 1")
            out.extend(v / total for v in block)
        return cls(out)

    @classmethod
    def from_budgets(cls, budget1: Iterable[Number], budget2: Iterable[Number]) -> ChoiceProbabilities:
        return cls(list(budget1) + list(budget2))

    def __getitem__(self, key: str) -> Fraction:
        """Look up ``"r|t"``."""
        return self.pi[REGION_LABELS.index(key)]

    def budget(self, t: int) -> tuple[Fraction, Fraction, Fraction]:
        return self.pi[3 * (t - 1):3 * t]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(REGION_LABELS, self.pi))


@dataclass(frozen=True, init=False)
class RationalMixture:
    """Probabilities over the rational types, in :data:`RATIONAL_TYPES` order."""

    mu: tuple[Fraction, ...]

    def __init__(self, mu):
        if isinstance(mu, dict):
            weights = {parse_type(k): to_fraction(v)[0] for k, v in mu.items()}
            extra = set(weights) - set(RATIONAL_TYPES)
            if extra:
                raise ValueError(f"not rationalizable types: {sorted(map(str, extra))}")
            values = tuple(weights.get(t, Fraction(0)) for t in RATIONAL_TYPES)
        else:
            values = tuple(to_fraction(v)[0] for v in mu)
        if len(values) != 6:
            raise ValueError(f"expected 6 mixture weights, got {len(values)}")
        if any(v < 0 for v in values) or sum(values) != 1:
            raise ValueError(f"mixture weights must be nonnegative and sum to 1: {values}")
        object.__setattr__(self, "mu", values)

    def __getitem__(self, theta) -> Fraction:
        return self.mu[RATIONAL_TYPES.index(parse_type(theta))]

    def as_dict(self) -> dict[DemandType, Fraction]:
        return dict(zip(RATIONAL_TYPES, self.mu))


def axiom_lhs(pi: ChoiceProbabilities) -> Fraction:
    """``pi^{2|1} + pi^{1|2} + pi^{3|1} + pi^{3|2} - min(pi^{3|1}, pi^{3|2})``."""
    _, p21, p31, p12, _, p32 = pi.pi
    return p21 + p12 + p31 + p32 - min(p31, p32)


def axiom_check(pi: ChoiceProbabilities) -> bool:
    """Closed-form test of stochastic rationalizability (exact)."""
    return axiom_lhs(pi) <= 1


def solve_mixture(pi: ChoiceProbabilities) -> Optional[RationalMixture]:
    """A mixture of rational types reproducing ``pi``, or ``None`` if none exists.

    Solved by exact phase-one simplex; among several feasible mixtures the
    first basic solution under Bland's rule is returned.
    """
    mu = feasible_point(MIXTURE_MATRIX, pi.pi)
    if mu is None:
        return None
    return RationalMixture(mu)


def verify_mixture(mu: RationalMixture, pi: ChoiceProbabilities) -> bool:
    """Check every equation of the mixture system exactly."""
    for row, target in zip(MIXTURE_MATRIX, pi.pi):
        if sum(a * m for a, m in zip(row, mu.mu)) != target:
            return False
    return True

"""Probability that a multinomial sample is stochastically rationalized.

With equal sample sizes ``n`` per observation and no intersection-point
types, a sample passes exactly when the region-1 count on budget 1 is at
least the region-1 count on budget 2. The two counts are independent
binomials, so the acceptance probability is ``P(X >= Y)`` with
``X ~ Bin(n, p^{1|1})`` and ``Y ~ Bin(n, p^{1|2})``.

Three routes compute it: a closed form in floating point, an exact
enumeration oracle for small ``n``, and a Monte-Carlo estimator.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import InstanceTooLarge, Region3MassPresent
from .geometry import NO_REGION3_TYPES
from .population import PopulationDistribution
from .sampling import (
    SampleCounts,
    conditional_binomial,
    observed_probabilities,
    region_counts,
    substream,
)
from .stochastic import axiom_check

MAX_BRUTE_FORCE_N = 8
# Replications per random substream in the Monte-Carlo estimator. Changing it
# changes the numbers a given seed produces.
MC_BLOCK_SIZE = 4096

TABLE2_SIZES = (10, 50, 100, 500, 1000)
TABLE2_POPULATIONS = {
    "uniform": PopulationDistribution({(1, 1): "1/4", (1, 2): "1/4", (2, 2): "1/4", (2, 1): "1/4"}),
    "proportional": PopulationDistribution({(1, 1): "2/9", (2, 2): "2/9", (1, 2): "4/9", (2, 1): "1/9"}),
}


@dataclass(frozen=True)
class BinaryMarginals:
    """Region-1/region-2 probabilities on each budget for intersection-free populations."""

    p11: Fraction
    p21: Fraction
    p12: Fraction
    p22: Fraction

    def __post_init__(self):
        for v in (self.p11, self.p21, self.p12, self.p22):
            if not 0 <= v <= 1:
                raise ValueError(f"marginal {v} outside [0, 1]")
        if self.p11 + self.p21 != 1 or self.p12 + self.p22 != 1:
            raise ValueError("marginals on each budget must sum to 1")


@dataclass(frozen=True)
class PowerResult:
    """Acceptance probability of the stochastic-rationalizability test.

    ``contains_irrational`` records whether the population had mass on a
    non-rationalizable type. If so every acceptance is a false acceptance and
    ``power`` is the rejection probability; otherwise every rejection is a
    false rejection.
    """

    acceptance_probability: float
    method: str
    n: int
    contains_irrational: bool
    standard_error: Optional[float] = None
    exact_value: Optional[Fraction] = None

    def __post_init__(self):
        if not 0 <= self.acceptance_probability <= 1:
            raise ValueError("acceptance probability outside [0, 1]")
        if self.standard_error is not None and self.standard_error < 0:
            raise ValueError("negative standard error")

    @property
    def false_acceptance_probability(self) -> Optional[float]:
        return self.acceptance_probability if self.contains_irrational else None

    @property
    def false_rejection_probability(self) -> Optional[float]:
        return None if self.contains_irrational else 1 - self.acceptance_probability

    @property
    def power(self) -> Optional[float]:
        return 1 - self.acceptance_probability if self.contains_irrational else None

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "method": self.method,
            "probability": self.acceptance_probability,
            "false_acceptance_probability": self.false_acceptance_probability,
            "false_rejection_probability": self.false_rejection_probability,
        }
        if self.standard_error is not None:
            out["standard_error"] = self.standard_error
        if self.exact_value is not None:
            out["exact"] = str(self.exact_value)
        return out


def _require_no_region3(nu: PopulationDistribution) -> None:
    if nu.has_region3_mass():
        raise Region3MassPresent("this method needs a population with no mass on region-3 types")


def marginals_of(nu: PopulationDistribution) -> BinaryMarginals:
    _require_no_region3(nu)
    return BinaryMarginals(
        p11=nu[1, 1] + nu[1, 2],
        p21=nu[2, 1] + nu[2, 2],
        p12=nu[1, 1] + nu[2, 1],
        p22=nu[1, 2] + nu[2, 2],
    )


def binomial_pmf(n: int, p: float) -> np.ndarray:
    """Binomial(n, p) probabilities for k = 0..n.

    Built from the successive ratio ``pmf[k+1]/pmf[k]`` outward from the
    mode and normalized at the end, so nothing underflows at the mode even
    when ``p**n`` does.
    """
    pmf = np.zeros(n + 1)
    if p <= 0:
        pmf[0] = 1.0
        return pmf
    if p >= 1:
        pmf[n] = 1.0
        return pmf
    q = 1.0 - p
    mode = min(n, int((n + 1) * p))
    pmf[mode] = 1.0
    for k in range(mode, n):
        pmf[k + 1] = pmf[k] * (n - k) / (k + 1) * p / q
    for k in range(mode, 0, -1):
        pmf[k - 1] = pmf[k] * k / (n - k + 1) * q / p
    return pmf / math.fsum(pmf)


def _pass_probability(n: int, p_x: float, p_y: float) -> float:
    """``P(X >= Y)`` for independent ``X ~ Bin(n, p_x)``, ``Y ~ Bin(n, p_y)``."""
    px = binomial_pmf(n, p_x)
    py = binomial_pmf(n, p_y)
    survival = np.cumsum(px[::-1])[::-1]
    value = math.fsum(py * survival)
    return min(1.0, max(0.0, value))


def power_closed_form(nu: PopulationDistribution, n: int) -> PowerResult:
    if n < 1:
        raise ValueError("sample size must be at least 1")
    m = marginals_of(nu)
    prob = _pass_probability(n, float(m.p11), float(m.p12))
    return PowerResult(prob, "closed_form", n, nu.irrational_mass > 0)


def _compositions(n: int, parts: int):
    for cuts in itertools.combinations(range(n + parts - 1), parts - 1):
        prev = -1
        out = []
        for c in cuts:
            out.append(c - prev - 1)
            prev = c
        out.append(n + parts - 2 - prev)
        yield tuple(out)


def power_brute_force(nu: PopulationDistribution, n: int) -> PowerResult:
    """Exact acceptance probability by enumerating every pair of count vectors.

    Each observation's counts over the four intersection-free types are
    weighted by their multinomial probability, and every pair is checked
    with :func:`axiom_check`. Limited to ``n <= 8``.
    """
    _require_no_region3(nu)
    if n < 1:
        raise ValueError("sample size must be at least 1")
    if n > MAX_BRUTE_FORCE_N:
        raise InstanceTooLarge(f"n={n} exceeds the enumeration limit {MAX_BRUTE_FORCE_N}")
    types = NO_REGION3_TYPES
    probs = [nu[t] for t in types]
    outcomes = []
    for comp in _compositions(n, len(types)):
        weight = Fraction(math.factorial(n))
        for k, p in zip(comp, probs):
            weight = weight / math.factorial(k) * p**k
        if weight:
            outcomes.append((SampleCounts(dict(zip(types, comp))), weight))
    total = Fraction(0)
    for (c1, w1), (c2, w2) in itertools.product(outcomes, repeat=2):
        if axiom_check(observed_probabilities(c1, c2)):
            total += w1 * w2
    return PowerResult(float(total), "brute_force", n, nu.irrational_mass > 0, exact_value=total)


def _accepted_in_block(probs, n: int, size: int, seed: int, block: int) -> int:
    c1 = region_counts(conditional_binomial(substream(seed, block, 1), n, probs, size), 1)
    c2 = region_counts(conditional_binomial(substream(seed, block, 2), n, probs, size), 2)
    # The closed-form test scaled by n, evaluated on integer counts.
    lhs = c1[:, 1] + c2[:, 0] + c1[:, 2] + c2[:, 2] - np.minimum(c1[:, 2], c2[:, 2])
    return int(np.count_nonzero(lhs <= n))


def power_monte_carlo(
    nu: PopulationDistribution, n: int, reps: int, seed: int, workers: int = 1
) -> PowerResult:
    """Share of simulated multinomial samples that pass the closed-form test.

    Replications are split into fixed blocks of :data:`MC_BLOCK_SIZE`, each
    drawing from its own substream, so the estimate is identical for any
    ``workers``. Populations with intersection-point types are allowed.
    """
    if n < 1 or reps < 1:
        raise ValueError("n and reps must be at least 1")
    probs = [float(v) for v in nu.nu]
    blocks = [
        (b, min(MC_BLOCK_SIZE, reps - b * MC_BLOCK_SIZE))
        for b in range(math.ceil(reps / MC_BLOCK_SIZE))
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            accepted = sum(pool.map(lambda bs: _accepted_in_block(probs, n, bs[1], seed, bs[0]), blocks))
    else:
        accepted = sum(_accepted_in_block(probs, n, size, seed, b) for b, size in blocks)
    p_hat = accepted / reps
    se = math.sqrt(p_hat * (1 - p_hat) / reps)
    return PowerResult(p_hat, "monte_carlo", n, nu.irrational_mass > 0, standard_error=se)


def round_half_away(x: float, places: int = 4) -> str:
    """Round to ``places`` decimals, ties away from zero, as a fixed-point string."""
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(repr(x)).quantize(quantum, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class Table2Row:
    population: str
    n: int
    probability: float

    @property
    def rounded(self) -> str:
        return round_half_away(self.probability)


def reproduce_table2(sizes=TABLE2_SIZES) -> list[Table2Row]:
    """Closed-form acceptance probabilities for the two benchmark populations."""
    return [
        Table2Row(name, n, power_closed_form(nu, n).acceptance_probability)
        for name, nu in TABLE2_POPULATIONS.items()
        for n in sizes
    ]

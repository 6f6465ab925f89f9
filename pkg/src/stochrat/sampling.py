"""Sampling schemes that turn a population into observed region probabilities.

Cross-section and panel samples are deterministic transforms of
caller-supplied sample weights. Multinomial samples are random; every
random draw comes from a PCG64 stream keyed by ``(seed, replication,
observation)`` so results do not depend on call order or worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import EmptySample
from .geometry import ALL_TYPES, DemandType, parse_type
from .population import PopulationDistribution, type_vector
from .stochastic import ChoiceProbabilities

# Region chosen by each type (ALL_TYPES order) on budget 1 and budget 2.
_REGION_OF = np.array([[theta.region(t) for theta in ALL_TYPES] for t in (1, 2)])


@dataclass(frozen=True, init=False)
class SampleWeights:
    """Nonnegative masses of sampled individuals per demand type.

    Use :meth:`for_population` to also enforce that no type is sampled
    beyond its population share.
    """

    s: tuple[Fraction, ...]

    def __init__(self, weights):
        values, _ = type_vector(weights)
        object.__setattr__(self, "s", values)

    @classmethod
    def for_population(cls, nu: PopulationDistribution, weights) -> SampleWeights:
        sample = cls(weights)
        for theta, s, v in zip(ALL_TYPES, sample.s, nu.nu):
            if s > v:
                raise ValueError(f"sample weight {s} for {theta} exceeds population share {v}")
        if sample.total == 0:
            raise EmptySample("sample has zero total mass")
        return sample

    def __getitem__(self, theta) -> Fraction:
        return self.s[ALL_TYPES.index(parse_type(theta))]

    @property
    def total(self) -> Fraction:
        return sum(self.s, Fraction(0))


def _region_shares(weights, t: int) -> list[Fraction]:
    total = sum(weights, Fraction(0))
    if total == 0:
        raise EmptySample(f"sample for observation {t} has zero total mass")
    shares = [Fraction(0)] * 3
    for theta, w in zip(ALL_TYPES, weights):
        shares[theta.region(t) - 1] += w
    return [v / total for v in shares]


def cross_section_probabilities(s1: SampleWeights, s2: SampleWeights) -> ChoiceProbabilities:
    """Observed region probabilities when each period is sampled separately."""
    return ChoiceProbabilities(_region_shares(s1.s, 1) + _region_shares(s2.s, 2))


def panel_probabilities(s: SampleWeights) -> ChoiceProbabilities:
    """Observed region probabilities when the same individuals appear in both periods."""
    return cross_section_probabilities(s, s)


@dataclass(frozen=True, init=False)
class SampleCounts:
    """Number of sampled individuals per demand type (ALL_TYPES order)."""

    c: tuple[int, ...]

    def __init__(self, counts):
        if isinstance(counts, dict):
            parsed = {parse_type(k): int(v) for k, v in counts.items()}
            values = tuple(parsed.get(t, 0) for t in ALL_TYPES)
        else:
            values = tuple(int(v) for v in counts)
        if len(values) != 9:
            raise ValueError(f"expected 9 counts, got {len(values)}")
        if any(v < 0 for v in values):
            raise ValueError("counts must be nonnegative")
        if sum(values) == 0:
            raise ValueError("counts must have a positive total")
        object.__setattr__(self, "c", values)

    @property
    def n(self) -> int:
        return sum(self.c)

    def __getitem__(self, theta) -> int:
        return self.c[ALL_TYPES.index(parse_type(theta))]

    def as_dict(self) -> dict[DemandType, int]:
        return dict(zip(ALL_TYPES, self.c))


def counts_to_probabilities(c: SampleCounts, t: int) -> tuple[Fraction, Fraction, Fraction]:
    """Region frequencies on budget ``t`` of the draws in ``c``."""
    return tuple(_region_shares([Fraction(v) for v in c.c], t))


def observed_probabilities(c1: SampleCounts, c2: SampleCounts) -> ChoiceProbabilities:
    """Combine the counts drawn for observation 1 and observation 2."""
    return ChoiceProbabilities(counts_to_probabilities(c1, 1) + counts_to_probabilities(c2, 2))


def substream(seed: int, replication: int, observation: int) -> np.random.Generator:
    """Independent PCG64 generator for one (seed, replication, observation) key."""
    if seed < 0 or seed >= 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, replication, observation])))


def conditional_binomial(rng: np.random.Generator, n: int, probs, size=None) -> np.ndarray:
    """Multinomial(n, probs) counts via successive conditional binomials.

    With ``size`` given, returns an array of shape ``(size, len(probs))``.
    """
    probs = np.asarray(probs, dtype=float)
    shape = (len(probs),) if size is None else (size, len(probs))
    out = np.zeros(shape, dtype=np.int64)
    remaining = np.full(() if size is None else size, n, dtype=np.int64)
    mass_left = 1.0
    for i, p in enumerate(probs[:-1]):
        if mass_left <= 0:
            break
        q = min(1.0, max(0.0, p / mass_left))
        draw = rng.binomial(remaining, q)
        out[..., i] = draw
        remaining = remaining - draw
        mass_left -= p
    out[..., -1] = remaining
    return out


def multinomial_draw(
    nu: PopulationDistribution, n: int, seed: int, replication: int = 0
) -> tuple[SampleCounts, SampleCounts]:
    """Independent multinomial samples of size ``n`` for both observations."""
    if n < 1:
        raise ValueError("sample size must be at least 1")
    probs = [float(v) for v in nu.nu]
    draws = []
    for t in (1, 2):
        counts = conditional_binomial(substream(seed, replication, t), n, probs)
        draws.append(SampleCounts(counts.tolist()))
    return draws[0], draws[1]


def region_counts(counts: np.ndarray, t: int) -> np.ndarray:
    """Collapse ``(..., 9)`` type counts to ``(..., 3)`` region counts on budget ``t``."""
    regions = _REGION_OF[t - 1]
    return np.stack([counts[..., regions == r].sum(axis=-1) for r in (1, 2, 3)], axis=-1)

"""Budget geometry for two goods and two budgets.

Two normalized budget lines ``p^t . x = 1`` that cross in the positive
orthant split each line into three demand regions:

* region 3 is the crossing point itself,
* on budget 1, region 1 is the segment that is unaffordable at ``p^2``
  and region 2 the segment that is affordable at ``p^2``,
* on budget 2, region 1 is the segment that is affordable at ``p^1``
  and region 2 the segment that is unaffordable at ``p^1``.

With ``p^1 = (2, 1)`` and ``p^2 = (1, 2)`` region 1 is the upper-left
segment of both lines. Under this labeling the six types in
:data:`RATIONAL_TYPES` are exactly the ones that satisfy SARP.

Values given as ``int``, :class:`~fractions.Fraction` or decimal/``"a/b"``
strings are handled exactly. Any ``float`` input switches the affected
comparisons to a relative tolerance of :data:`REL_TOL`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Union

from .errors import NonOverlappingBudgets, OffBudgetLine

Number = Union[int, float, str, Fraction]

REL_TOL = 1e-9


def to_fraction(value: Number) -> tuple[Fraction, bool]:
    """Convert ``value`` to a Fraction and report whether it was exact.

    Floats are converted by their exact binary value and flagged inexact.
    Strings may be integers, decimals (``"0.1"``) or ratios (``"1/10"``).
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, Fraction):
        return value, True
    if isinstance(value, int):
        return Fraction(value), True
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(value), False
    if isinstance(value, str):
        return Fraction(value.strip()), True
    raise TypeError(f"cannot interpret {value!r} as a number")


def compare(a: Fraction, b: Fraction, exact: bool = True) -> int:
    """Three-way comparison, with a relative tolerance band when inexact."""
    if not exact:
        scale = max(1, abs(a), abs(b))
        if abs(a - b) <= REL_TOL * scale:
            return 0
    return (a > b) - (a < b)


def _pair(values: Iterable[Number], what: str) -> tuple[tuple[Fraction, Fraction], bool]:
    converted = [to_fraction(v) for v in values]
    if len(converted) != 2:
        raise ValueError(f"{what} needs exactly two components, got {len(converted)}")
    return (converted[0][0], converted[1][0]), all(e for _, e in converted)


@dataclass(frozen=True, init=False)
class Budget:
    """Normalized prices ``p`` of the budget line ``p . x = 1``."""

    prices: tuple[Fraction, Fraction]
    exact: bool

    def __init__(self, prices: Iterable[Number]):
        p, exact = _pair(prices, "prices")
        if p[0] <= 0 or p[1] <= 0:
            raise ValueError(f"prices must be strictly positive, got {p}")
        object.__setattr__(self, "prices", p)
        object.__setattr__(self, "exact", exact)

    def cost(self, x: Bundle) -> Fraction:
        return self.prices[0] * x.quantities[0] + self.prices[1] * x.quantities[1]

    def intercepts(self) -> tuple[Bundle, Bundle]:
        """The two endpoints of the budget line, on the x2 and x1 axes."""
        return Bundle((0, 1 / self.prices[1])), Bundle((1 / self.prices[0], 0))


@dataclass(frozen=True, init=False)
class Bundle:
    """A consumption bundle in the nonnegative orthant."""

    quantities: tuple[Fraction, Fraction]
    exact: bool

    def __init__(self, quantities: Iterable[Number]):
        q, exact = _pair(quantities, "bundle")
        if q[0] < 0 or q[1] < 0:
            raise ValueError(f"bundle quantities must be nonnegative, got {q}")
        object.__setattr__(self, "quantities", q)
        object.__setattr__(self, "exact", exact)

    def midpoint(self, other: Bundle) -> Bundle:
        a, b = self.quantities, other.quantities
        return Bundle(((a[0] + b[0]) / 2, (a[1] + b[1]) / 2))


@dataclass(frozen=True)
class BudgetPair:
    """Two budgets whose lines cross at a strictly positive bundle."""

    budget1: Budget
    budget2: Budget

    def __post_init__(self):
        intersection_bundle(self)

    @classmethod
    def from_prices(cls, p1: Iterable[Number], p2: Iterable[Number]) -> BudgetPair:
        return cls(Budget(p1), Budget(p2))

    @property
    def exact(self) -> bool:
        return self.budget1.exact and self.budget2.exact

    def budget(self, t: int) -> Budget:
        if t == 1:
            return self.budget1
        if t == 2:
            return self.budget2
        raise ValueError(f"observation index must be 1 or 2, got {t}")

    def swapped(self) -> BudgetPair:
        return BudgetPair(self.budget2, self.budget1)


class DemandType(NamedTuple):
    """Region chosen on budget 1 (``j``) and on budget 2 (``k``)."""

    j: int
    k: int

    def __str__(self) -> str:
        return f"theta({self.j},{self.k})"

    def region(self, t: int) -> int:
        """Region this type chooses on budget ``t``."""
        return self.j if t == 1 else self.k


# Column order of the mixture system; also the first six rows of the type table.
RATIONAL_TYPES: tuple[DemandType, ...] = tuple(
    DemandType(j, k) for j, k in [(1, 1), (1, 2), (2, 2), (1, 3), (3, 2), (3, 3)]
)
IRRATIONAL_TYPES: tuple[DemandType, ...] = tuple(
    DemandType(j, k) for j, k in [(2, 1), (2, 3), (3, 1)]
)
ALL_TYPES: tuple[DemandType, ...] = RATIONAL_TYPES + IRRATIONAL_TYPES
# Types that never choose the intersection point.
NO_REGION3_TYPES: tuple[DemandType, ...] = tuple(
    t for t in ALL_TYPES if 3 not in t
)


def parse_type(key) -> DemandType:
    """Accept ``DemandType``, ``(j, k)``, ``"j,k"``, ``"jk"`` or ``"theta(j,k)"``."""
    if isinstance(key, str):
        s = key.strip().lower()
        for prefix in ("theta", "θ"):
            if s.startswith(prefix):
                s = s[len(prefix):]
        s = s.strip("() ")
        digits = [c for c in s if c.isdigit()]
        rest = s.replace(",", "").replace(" ", "")
        if len(digits) != 2 or rest != "".join(digits):
            raise ValueError(f"cannot parse demand type {key!r}")
        key = (int(digits[0]), int(digits[1]))
    j, k = key
    if j not in (1, 2, 3) or k not in (1, 2, 3):
        raise ValueError(f"regions must be 1, 2 or 3, got {key!r}")
    return DemandType(int(j), int(k))


def is_rational_type(theta) -> bool:
    return parse_type(theta) in RATIONAL_TYPES


def intersection_bundle(pair: BudgetPair) -> Bundle:
    """The bundle where both budget lines cross (region 3 of both budgets)."""
    (a, b), (c, d) = pair.budget1.prices, pair.budget2.prices
    det = a * d - b * c
    if det == 0:
        raise NonOverlappingBudgets(f"proportional prices {pair.budget1.prices} and {pair.budget2.prices}")
    x1 = (d - b) / det
    x2 = (a - c) / det
    if x1 <= 0 or x2 <= 0:
        raise NonOverlappingBudgets(f"budget lines cross at ({x1}, {x2}), outside the positive orthant")
    return Bundle((x1, x2))


def _check_on_line(pair: BudgetPair, t: int, x: Bundle, exact: bool) -> None:
    budget = pair.budget(t)
    if compare(budget.cost(x), Fraction(1), exact) != 0:
        raise OffBudgetLine(f"bundle {x.quantities} costs {budget.cost(x)} on budget {t}, not 1")


def classify_region(pair: BudgetPair, t: int, x: Bundle) -> int:
    """Demand region (1, 2 or 3) of bundle ``x`` on budget line ``t``."""
    exact = pair.exact and x.exact
    _check_on_line(pair, t, x, exact)
    other = pair.budget(2 if t == 1 else 1)
    c = compare(other.cost(x), Fraction(1), exact)
    if c == 0:
        return 3
    above_other = c > 0
    if t == 1:
        return 1 if above_other else 2
    return 2 if above_other else 1


def demand_type_of(pair: BudgetPair, x1: Bundle, x2: Bundle) -> DemandType:
    return DemandType(classify_region(pair, 1, x1), classify_region(pair, 2, x2))


def canonical_bundle(pair: BudgetPair, r: int, t: int) -> Bundle:
    """A representative bundle of region ``r`` on budget ``t``.

    Region 3 is the intersection; regions 1 and 2 use the midpoint of their
    open segment.
    """
    cross = intersection_bundle(pair)
    if r == 3:
        return cross
    for end in pair.budget(t).intercepts():
        mid = cross.midpoint(end)
        if classify_region(pair, t, mid) == r:
            return mid
    raise ValueError(f"region must be 1, 2 or 3, got {r!r}")


@dataclass(frozen=True)
class DeterministicDataset:
    """Prices and one chosen bundle per budget."""

    budgets: BudgetPair
    choice1: Bundle
    choice2: Bundle

    def __post_init__(self):
        _check_on_line(self.budgets, 1, self.choice1, self.exact)
        _check_on_line(self.budgets, 2, self.choice2, self.exact)

    @property
    def exact(self) -> bool:
        return self.budgets.exact and self.choice1.exact and self.choice2.exact

    def choice(self, t: int) -> Bundle:
        return self.choice1 if t == 1 else self.choice2

    @classmethod
    def from_type(cls, pair: BudgetPair, theta) -> DeterministicDataset:
        theta = parse_type(theta)
        return cls(pair, canonical_bundle(pair, theta.j, 1), canonical_bundle(pair, theta.k, 2))


def sarp_violations(d: DeterministicDataset) -> list[tuple[int, int]]:
    """Ordered pairs ``(s, t)`` for which the two-observation SARP implication fails.

    The implication for ``(s, t)``: if ``x^s != x^t`` and ``x^t`` is affordable
    at ``p^s`` then ``x^s`` must be strictly unaffordable at ``p^t``.
    """
    exact = d.exact
    failed = []
    for s, t in ((1, 2), (2, 1)):
        xs, xt = d.choice(s), d.choice(t)
        ps, pt = d.budgets.budget(s), d.budgets.budget(t)
        distinct = any(compare(a, b, exact) != 0 for a, b in zip(xs.quantities, xt.quantities))
        if not distinct:
            continue
        if compare(ps.cost(xt), ps.cost(xs), exact) <= 0 and not compare(pt.cost(xt), pt.cost(xs), exact) < 0:
            failed.append((s, t))
    return failed


def check_sarp(d: DeterministicDataset) -> bool:
    """Whether the two choices are rationalized by a locally non-satiated utility."""
    return not sarp_violations(d)

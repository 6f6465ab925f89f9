"""
Demand regions and the nine demand types
========================================

Two budget lines that cross split each line into two segments and the
crossing point. An individual is described by the segment chosen on each
budget. We build a representative choice for each type and run the
two-observation SARP test on it.
"""

from stochrat import ALL_TYPES, BudgetPair, DeterministicDataset, check_sarp, intersection_bundle

pair = BudgetPair.from_prices((2, 1), (1, 2))
print("budget lines cross at", intersection_bundle(pair).quantities)

# Six of the nine types are consistent with maximizing a single utility.
for theta in ALL_TYPES:
    d = DeterministicDataset.from_type(pair, theta)
    x1 = tuple(str(q) for q in d.choice1.quantities)
    x2 = tuple(str(q) for q in d.choice2.quantities)
    print(f"{theta}:  x1={x1}  x2={x2}  SARP={'yes' if check_sarp(d) else 'no'}")

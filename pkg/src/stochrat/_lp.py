"""Phase-one simplex over exact rationals for tiny systems ``A x = b, x >= 0``."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def feasible_point(A: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """Return a basic feasible solution of ``A x = b, x >= 0`` or ``None``.

    Uses one artificial variable per row and Bland's smallest-index rule,
    so the result is deterministic and the method cannot cycle.
    """
    m, n = len(A), len(A[0])
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row, rhs = [-v for v in row], -rhs
        art = [Fraction(int(i == r)) for r in range(m)]
        rows.append(row + art + [rhs])
    basis = [n + i for i in range(m)]
    width = n + m

    # Reduced costs for minimizing the sum of artificials.
    cost = [Fraction(0)] * (width + 1)
    for row in rows:
        for c in range(width + 1):
            cost[c] -= row[c]
    for i in range(m):
        cost[n + i] += 1

    while True:
        entering = next((c for c in range(width) if cost[c] < 0), None)
        if entering is None:
            break
        best = None
        for i, row in enumerate(rows):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            # Unbounded cannot happen for a phase-one objective bounded below by 0.
            raise RuntimeError("phase-one objective unbounded")
        _pivot(rows, cost, best[1], entering)
        basis[best[1]] = entering

    if -cost[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = rows[i][-1]
    return x


def _pivot(rows, cost, r, c):
    pivot = rows[r][c]
    rows[r] = [v / pivot for v in rows[r]]
    for i, row in enumerate(rows):
        if i != r and row[c] != 0:
            f = row[c]
            rows[i] = [a - f * p for a, p in zip(row, rows[r])]
    f = cost[c]
    if f != 0:
        cost[:] = [a - f * p for a, p in zip(cost, rows[r])]

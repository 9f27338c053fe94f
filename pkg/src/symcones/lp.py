"""Exact rational phase-I simplex with Bland's anticycling rule.

Only feasibility is ever needed here: find ``x >= 0`` with ``A x = b``.  The
returned point is a basic feasible solution, so it has at most ``rank(A)``
nonzero entries; cone-membership witnesses inherit Caratheodory's bound from
that.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Return a basic ``x >= 0`` with ``A x == b`` exactly, or ``None``."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return []
    rows = []
    for i in range(m):
        r = [Fraction(a) for a in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            r = [-a for a in r]
            rhs = -rhs
        # artificial column for row i
        rows.append(r + [Fraction(1) if k == i else Fraction(0) for k in range(m)] + [rhs])
    ncols = n + m
    basis = [n + i for i in range(m)]
    # objective: minimise sum of artificials == maximise -sum; keep reduced costs
    # for "minimise w = sum art" as cost row c_j = -sum_i a_ij over original cols
    cost = [Fraction(0)] * (ncols + 1)
    for r in rows:
        for j in range(n):
            cost[j] -= r[j]
        cost[ncols] -= r[ncols]

    while True:
        # Bland: smallest index with negative reduced cost enters
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[ncols] / r[enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            # unbounded cannot happen for phase I (objective bounded below by 0)
            raise ArithmeticError("phase-I simplex reported unbounded")
        _pivot(rows, cost, best[1], enter)
        basis[best[1]] = enter

    if cost[ncols] != 0:
        return None

    # drive remaining artificials (at value zero) out of the basis when possible
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if rows[i][j] != 0), None)
            if col is not None:
                _pivot(rows, cost, i, col)
                basis[i] = col

    x = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        if bj < n:
            x[bj] = rows[i][ncols]
    return x


def _pivot(rows, cost, pr, pc):
    prow = rows[pr]
    p = prow[pc]
    if p != 1:
        prow[:] = [a / p for a in prow]
    for i, r in enumerate(rows):
        if i != pr and r[pc] != 0:
            f = r[pc]
            r[:] = [a - f * c for a, c in zip(r, prow)]
    if cost[pc] != 0:
        f = cost[pc]
        cost[:] = [a - f * c for a, c in zip(cost, prow)]


def cone_combination(generators: Sequence[Sequence], target: Sequence):
    """Nonnegative ``lam`` with ``sum lam_i g_i == target`` (basic, sparse) or None."""
    if not generators:
        return [] if all(t == 0 for t in target) else None
    dim = len(target)
    A = [[g[i] for g in generators] for i in range(dim)]
    return feasible_point(A, target)


def convex_combination(points: Sequence[Sequence], target: Sequence):
    """Convex weights reproducing ``target`` from ``points`` or None."""
    if not points:
        return None
    dim = len(target)
    A = [[p[i] for p in points] for i in range(dim)]
    A.append([1] * len(points))
    return feasible_point(A, list(target) + [1])

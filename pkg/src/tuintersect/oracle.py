"""Exhaustive reference solvers for small instances.

Enumerates every binary solution of A x = b, then scans all n-multisets of
them.  Multisets suffice because the vulnerability vector ignores order.
Budgets are hard: exceeding one raises instead of truncating.
"""
from __future__ import annotations

from itertools import combinations_with_replacement, islice
from math import comb

import numpy as np

from .compression import VulnerabilityVector
from .core import TUSystem
from .errors import BudgetExceeded, DimensionTooLarge, Infeasible, TooManySolutions

MAX_ENUMERATION_DIM = 25
DEFAULT_CAP = 40
DEFAULT_BUDGET = 250_000
_CHUNK = 1 << 16


def enumerate_feasible(system: TUSystem, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All x in {0,1}^d with A x = b, in lexicographic order (x_1 most significant)."""
    d = system.d
    if d > MAX_ENUMERATION_DIM:
        raise DimensionTooLarge(f"d = {d} exceeds the enumeration limit {MAX_ENUMERATION_DIM}")
    a = np.array(system.a, dtype=np.int64)
    b = np.array(system.b, dtype=np.int64)
    shifts = np.arange(d - 1, -1, -1, dtype=np.int64)
    found: list[tuple[int, ...]] = []
    for start in range(0, 1 << d, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, 1 << d), dtype=np.int64)
        bits = (codes[:, None] >> shifts) & 1
        ok = np.all(bits @ a.T == b, axis=1)
        found.extend(tuple(int(v) for v in row) for row in bits[ok])
        if len(found) > cap:
            raise TooManySolutions(cap)
    return found


def _multiset_scan(system: TUSystem, n: int, cap: int, budget: int):
    """Yield (index_combos, vulnerability_matrix) chunks over all n-multisets."""
    if n < 1:
        raise ValueError("n must be positive")
    sols = enumerate_feasible(system, cap)
    if not sols:
        raise Infeasible("A x = b has no 0/1 solution")
    total = comb(len(sols) + n - 1, n)
    if total > budget:
        raise BudgetExceeded(f"{total} multisets exceed the budget {budget}")
    x = np.array(sols, dtype=np.int64)
    levels = np.arange(1, n + 1)
    it = combinations_with_replacement(range(len(sols)), n)
    while True:
        idx = np.array(list(islice(it, _CHUNK)), dtype=np.int64).reshape(-1, n)
        if not len(idx):
            return
        counts = x[idx].sum(axis=1)
        f = (counts[:, :, None] >= levels).sum(axis=1)
        yield idx, f


def brute_lexmin(system: TUSystem, n: int, cap: int = DEFAULT_CAP, budget: int = DEFAULT_BUDGET) -> VulnerabilityVector:
    best = None
    for _, f in _multiset_scan(system, n, cap, budget):
        # np.lexsort treats its last key as primary, i.e. f_n
        row = f[np.lexsort(f.T)[0]]
        cand = VulnerabilityVector(row.tolist())
        if best is None or cand < best:
            best = cand
    return best


def brute_min_critical(system: TUSystem, n: int, cap: int = DEFAULT_CAP, budget: int = DEFAULT_BUDGET) -> int:
    return min(int(f[:, -1].min()) for _, f in _multiset_scan(system, n, cap, budget))

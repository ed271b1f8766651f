"""Minimize only the number of critical components, with an LP in 2d variables.

The returned bundle is optimal for the critical count f_n alone; its lower
layers are whatever decomposition produced.  Use ``solve_lexmin`` when the
full vulnerability vector matters.
"""
from __future__ import annotations

from typing import NamedTuple

from .compression import vulnerability
from .core import SolutionBundle, TUSystem, validate_tu_entries
from .decompose import decompose
from .errors import Infeasible, TUIntersectError
from .lp import LpProblem, assert_integral, solve_lp


class CriticalResult(NamedTuple):
    bundle: SolutionBundle
    critical: int


def critical_lp(system: TUSystem, n: int) -> LpProblem:
    """Variables (y, z): A(y + z) = n b, 0 <= y <= n-1, 0 <= z <= 1, minimize sum z."""
    d = system.d
    a_eq = [list(row) * 2 for row in system.a]
    b_eq = [n * v for v in system.b]
    return LpProblem(a_eq, b_eq, [0] * (2 * d), [n - 1] * d + [1] * d, [0] * d + [1] * d)


def solve_min_critical(system: TUSystem, n: int) -> CriticalResult:
    if n < 1:
        raise ValueError("n must be positive")
    validate_tu_entries(system)
    d = system.d
    out = solve_lp(critical_lp(system, n))
    if not out.optimal:
        raise Infeasible("A x = b has no 0/1 solution")
    yz = assert_integral(out.solution)
    x = [yz[i] + yz[d + i] for i in range(d)]
    bundle = decompose(system, n, x)
    critical = vulnerability(bundle).critical
    # the intersection lies inside z, and z is optimal, so they have equal size
    if critical != out.objective_value:
        raise TUIntersectError(f"critical count {critical} differs from LP optimum {out.objective_value}")
    return CriticalResult(bundle, critical)

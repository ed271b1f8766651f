"""Split an integer vector x with A x = n b, 0 <= x <= n, into n binary solutions of A x = b."""
from __future__ import annotations

from typing import Sequence

from .core import SolutionBundle, TUSystem
from .errors import InternalInfeasible, PreconditionViolated
from .lp import LpProblem, assert_integral, solve_lp


def rounding_lp(system: TUSystem, k: int, x: Sequence[int]) -> LpProblem:
    """Feasibility LP for one peel: A y = b with floor(x/k) <= y <= ceil(x/k)."""
    lower = [xj // k for xj in x]
    upper = [-(-xj // k) for xj in x]
    return LpProblem(system.a, system.b, lower, upper, [0] * system.d)


def decompose(system: TUSystem, n: int, x: Sequence[int]) -> SolutionBundle:
    """Return x^1..x^n in {0,1}^d with sum x, each satisfying A x^k = b.

    Peels one vector per step, from k = n down to 2; the remainder is x^1.
    Every coordinate with x_j = 0 (resp. n) is 0 (resp. 1) in all outputs.
    """
    x = [int(v) for v in x]
    if n < 1:
        raise PreconditionViolated("n must be positive")
    if len(x) != system.d:
        raise PreconditionViolated(f"x has length {len(x)}, expected {system.d}")
    if any(not 0 <= v <= n for v in x):
        raise PreconditionViolated(f"x has entries outside [0, {n}]")
    if list(system.apply(x)) != [n * bi for bi in system.b]:
        raise PreconditionViolated("A x != n b")

    peeled = []
    rest = x
    for k in range(n, 1, -1):
        out = solve_lp(rounding_lp(system, k, rest))
        if not out.optimal:
            raise InternalInfeasible(
                f"rounding LP infeasible with {k} vectors left; is the matrix totally unimodular?"
            )
        y = assert_integral(out.solution)
        peeled.append(y)
        rest = [r - v for r, v in zip(rest, y)]
    if any(v not in (0, 1) for v in rest) or not system.is_solution(rest):
        raise InternalInfeasible("remainder is not a binary solution; is the matrix totally unimodular?")
    peeled.append(tuple(rest))
    peeled.reverse()
    return SolutionBundle(peeled)

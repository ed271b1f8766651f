"""Lexicographically minimal intersection via a weighted-compression LP."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .compression import VulnerabilityVector, compress, vulnerability
from .core import SolutionBundle, TUSystem, validate_tu_entries
from .decompose import decompose
from .errors import DimensionMismatch, Infeasible, NonMonotoneWeights, TUIntersectError
from .lp import LpProblem, assert_integral, solve_lp


@dataclass(frozen=True)
class WeightVector:
    """n blocks of d integer weights; block k applies to the k-th compression layer."""

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Sequence[Sequence[int]]):
        blks = tuple(tuple(int(v) for v in blk) for blk in blocks)
        if not blks or any(len(blk) != len(blks[0]) for blk in blks):
            raise DimensionMismatch("weight blocks must be nonempty and of equal length")
        object.__setattr__(self, "blocks", blks)

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def d(self) -> int:
        return len(self.blocks[0])

    def flat(self) -> tuple[int, ...]:
        return tuple(v for blk in self.blocks for v in blk)

    def is_nondecreasing(self) -> bool:
        return all(
            all(a <= b for a, b in zip(lo, hi)) for lo, hi in zip(self.blocks, self.blocks[1:])
        )

    def value(self, bundle) -> int:
        """``c . x`` for a bundle (or compression layers) in the same block order."""
        return sum(c * v for blk, vec in zip(self.blocks, bundle) for c, v in zip(blk, vec))


def lex_weights(d: int, n: int) -> WeightVector:
    """Block k (1-based) is constant (d+1)**(k-1); large enough that the
    weighted compression value orders bundles lexicographically."""
    return WeightVector([[(d + 1) ** k] * d for k in range(n)])


class WeightedResult(NamedTuple):
    bundle: SolutionBundle
    lp_value: int


class LexminResult(NamedTuple):
    bundle: SolutionBundle
    vulnerability: VulnerabilityVector
    objective: int


def relaxation_lp(system: TUSystem, n: int, c: WeightVector) -> LpProblem:
    """d*n binary-boxed variables, block k is x^k; constraint A (x^1 + ... + x^n) = n b."""
    d = system.d
    a_eq = [list(row) * n for row in system.a]
    b_eq = [n * v for v in system.b]
    return LpProblem(a_eq, b_eq, [0] * (d * n), [1] * (d * n), list(c.flat()))


def solve_weighted_compression(system: TUSystem, n: int, c: WeightVector) -> WeightedResult:
    """Minimize ``c . compress(x)`` over bundles of n binary solutions of A x = b.

    Solves the linear relaxation on the stacked matrix [A, ..., A], then
    re-splits the optimal column sum into n genuine solutions.  Their
    compression equals that of the LP optimum, and for nondecreasing c this
    costs no more than the LP value, which is a lower bound.
    """
    if n < 1:
        raise ValueError("n must be positive")
    validate_tu_entries(system)
    if c.n != n or c.d != system.d:
        raise DimensionMismatch(f"weights are {c.n}x{c.d}, expected {n}x{system.d}")
    if not c.is_nondecreasing():
        raise NonMonotoneWeights("weight blocks must be nondecreasing")
    out = solve_lp(relaxation_lp(system, n, c))
    if not out.optimal:
        raise Infeasible("A x = b has no 0/1 solution")
    y = assert_integral(out.solution)
    d = system.d
    total = [sum(y[k * d + i] for k in range(n)) for i in range(d)]
    return WeightedResult(decompose(system, n, total), out.objective_value)


def solve_lexmin(system: TUSystem, n: int) -> LexminResult:
    """n solutions of A x = b whose vulnerability vector is lexicographically minimal."""
    c = lex_weights(system.d, n)
    bundle, lp_value = solve_weighted_compression(system, n, c)
    objective = c.value(compress(bundle).layers)
    if objective != lp_value:
        raise TUIntersectError(f"compressed value {objective} differs from LP optimum {lp_value}")
    return LexminResult(bundle, vulnerability(bundle), objective)

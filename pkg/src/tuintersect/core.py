"""Domain types: TU equality systems, solution bundles and the graph frontends."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import (
    DimensionMismatch,
    EntryOutOfRange,
    InvalidInstance,
    UnbalancedSides,
)


@dataclass(frozen=True)
class TUSystem:
    """The equality system ``A x = b`` with an integer matrix ``A`` (m x d).

    Entry range is not checked on construction; call :func:`validate_tu_entries`.
    """

    a: tuple[tuple[int, ...], ...]
    b: tuple[int, ...]

    def __init__(self, a: Sequence[Sequence[int]], b: Sequence[int]):
        rows = tuple(tuple(_as_int(v) for v in row) for row in a)
        rhs = tuple(_as_int(v) for v in b)
        if not rows or not rows[0]:
            raise DimensionMismatch("system needs at least one row and one column")
        d = len(rows[0])
        if any(len(row) != d for row in rows):
            raise DimensionMismatch("rows of A have different lengths")
        if len(rhs) != len(rows):
            raise DimensionMismatch(f"b has length {len(rhs)}, A has {len(rows)} rows")
        object.__setattr__(self, "a", rows)
        object.__setattr__(self, "b", rhs)

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def d(self) -> int:
        return len(self.a[0])

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        """Return ``A x``."""
        if len(x) != self.d:
            raise DimensionMismatch(f"vector has length {len(x)}, expected {self.d}")
        return tuple(sum(aij * xj for aij, xj in zip(row, x) if aij) for row in self.a)

    def is_solution(self, x: Sequence[int]) -> bool:
        return self.apply(x) == self.b


@dataclass(frozen=True)
class SolutionBundle:
    """n binary vectors of common length d.

    Order carries no meaning; solvers emit whatever order decomposition produced.
    """

    vectors: tuple[tuple[int, ...], ...]

    def __init__(self, vectors: Sequence[Sequence[int]]):
        vecs = tuple(tuple(int(v) for v in vec) for vec in vectors)
        if not vecs:
            raise InvalidInstance("a bundle needs at least one vector")
        d = len(vecs[0])
        for k, vec in enumerate(vecs):
            if len(vec) != d:
                raise DimensionMismatch(f"vector {k} has length {len(vec)}, expected {d}")
            if any(v not in (0, 1) for v in vec):
                raise InvalidInstance(f"vector {k} is not binary: {vec}")
        object.__setattr__(self, "vectors", vecs)

    @property
    def n(self) -> int:
        return len(self.vectors)

    @property
    def d(self) -> int:
        return len(self.vectors[0])

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __getitem__(self, k):
        return self.vectors[k]

    def total(self) -> tuple[int, ...]:
        """Entrywise sum of the vectors."""
        return tuple(map(sum, zip(*self.vectors)))

    def satisfies(self, system: TUSystem) -> bool:
        return all(system.is_solution(x) for x in self.vectors)


@dataclass(frozen=True)
class DigraphInstance:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    s: int
    t: int
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if self.num_vertices < 2:
            raise InvalidInstance("a digraph instance needs at least two vertices")
        if not self.edges:
            raise InvalidInstance("a digraph instance needs at least one edge")
        for name, v in (("s", self.s), ("t", self.t)):
            if not 0 <= v < self.num_vertices:
                raise InvalidInstance(f"{name} = {v} is not a vertex")
        if self.s == self.t:
            raise InvalidInstance("s and t must be distinct")
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise InvalidInstance(f"edge {e} = ({u}, {v}) has an invalid endpoint")
            if u == v:
                raise InvalidInstance(f"edge {e} is a self-loop at vertex {u}")
        if self.n < 1:
            raise InvalidInstance("n must be positive")


@dataclass(frozen=True)
class BipartiteInstance:
    """Edges are (left, right) pairs, each side indexed from 0."""

    left: int
    right: int
    edges: tuple[tuple[int, int], ...]
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if self.left < 1 or self.right < 1:
            raise InvalidInstance("both sides need at least one vertex")
        if not self.edges:
            raise InvalidInstance("a bipartite instance needs at least one edge")
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.left and 0 <= v < self.right):
                raise InvalidInstance(f"edge {e} = ({u}, {v}) has an invalid endpoint")
        if self.n < 1:
            raise InvalidInstance("n must be positive")


def _as_int(v) -> int:
    if isinstance(v, bool) or int(v) != v:
        raise InvalidInstance(f"expected an integer, got {v!r}")
    return int(v)


def validate_tu_entries(system: TUSystem) -> None:
    """Raise :class:`EntryOutOfRange` at the first entry outside {-1, 0, 1}."""
    for i, row in enumerate(system.a):
        for j, v in enumerate(row):
            if v not in (-1, 0, 1):
                raise EntryOutOfRange(i, j, v)


class TUCheck(enum.Enum):
    YES = "yes"
    NO = "no"
    TOO_LARGE = "too_large"


def integer_determinant(mat: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(row) for row in mat]
    k = len(a)
    if k == 0:
        return 1
    sign, prev = 1, 1
    for p in range(k - 1):
        if a[p][p] == 0:
            for r in range(p + 1, k):
                if a[r][p] != 0:
                    a[p], a[r] = a[r], a[p]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) // prev
        prev = a[p][p]
    return sign * a[k - 1][k - 1]


def count_square_submatrices(m: int, d: int) -> int:
    return sum(comb(m, k) * comb(d, k) for k in range(1, min(m, d) + 1))


def is_totally_unimodular_bruteforce(a: Sequence[Sequence[int]], size_limit: int = 200_000) -> TUCheck:
    """Check every square minor of ``a``; exponential, meant for small matrices."""
    rows = [list(r) for r in a]
    m = len(rows)
    d = len(rows[0]) if rows else 0
    if count_square_submatrices(m, d) > size_limit:
        return TUCheck.TOO_LARGE
    for row in rows:
        if any(v not in (-1, 0, 1) for v in row):
            return TUCheck.NO
    for k in range(2, min(m, d) + 1):
        for ri in combinations(range(m), k):
            sub_rows = [rows[i] for i in ri]
            for ci in combinations(range(d), k):
                if integer_determinant([[r[j] for j in ci] for r in sub_rows]) not in (-1, 0, 1):
                    return TUCheck.NO
    return TUCheck.YES


def digraph_to_system(inst: DigraphInstance) -> TUSystem:
    """Vertex-edge incidence system: -1 at each tail, +1 at each head, b_s = -1, b_t = +1.

    0/1 solutions are s-t paths, possibly together with edge-disjoint cycles.
    """
    a = [[0] * len(inst.edges) for _ in range(inst.num_vertices)]
    for e, (u, v) in enumerate(inst.edges):
        a[u][e] = -1
        a[v][e] = 1
    b = [0] * inst.num_vertices
    b[inst.s] = -1
    b[inst.t] = 1
    return TUSystem(a, b)


def bipartite_to_system(inst: BipartiteInstance) -> TUSystem:
    """Rows are left vertices then right vertices; 0/1 solutions are perfect matchings."""
    if inst.left != inst.right:
        raise UnbalancedSides(inst.left, inst.right)
    a = [[0] * len(inst.edges) for _ in range(inst.left + inst.right)]
    for e, (u, v) in enumerate(inst.edges):
        a[u][e] = 1
        a[inst.left + v][e] = 1
    return TUSystem(a, [1] * (inst.left + inst.right))

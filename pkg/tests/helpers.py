"""Fixture instances and independent brute-force references for the tests."""
from __future__ import annotations

import random
from itertools import combinations, product

import networkx as nx

from tuintersect.core import (
    BipartiteInstance,
    DigraphInstance,
    TUSystem,
    bipartite_to_system,
    digraph_to_system,
)

BRIDGE = DigraphInstance(3, ((0, 1), (0, 1), (1, 2)), 0, 2)
DIAMOND = DigraphInstance(4, ((0, 1), (1, 3), (0, 2), (2, 3)), 0, 3)
SINGLE_EDGE = DigraphInstance(2, ((0, 1),), 0, 1)
K22 = BipartiteInstance(2, 2, ((0, 0), (0, 1), (1, 0), (1, 1)))


def bridge() -> TUSystem:
    return digraph_to_system(BRIDGE)


def diamond() -> TUSystem:
    return digraph_to_system(DIAMOND)


def single_edge() -> TUSystem:
    return digraph_to_system(SINGLE_EDGE)


def k22() -> TUSystem:
    return bipartite_to_system(K22)


def solutions_by_product(system: TUSystem) -> list[tuple[int, ...]]:
    """Every binary solution, by plain itertools enumeration."""
    out = []
    for x in product((0, 1), repeat=system.d):
        if all(sum(a * v for a, v in zip(row, x)) == rhs for row, rhs in zip(system.a, system.b)):
            out.append(x)
    return out


def join_of_meets(vectors) -> list[tuple[int, ...]]:
    """Compression layers straight from the definition: OR over k-subsets of AND."""
    n, d = len(vectors), len(vectors[0])
    layers = []
    for k in range(1, n + 1):
        layer = [0] * d
        for idx in combinations(range(n), k):
            meet = [min(vectors[i][j] for i in idx) for j in range(d)]
            layer = [max(a, b) for a, b in zip(layer, meet)]
        layers.append(tuple(layer))
    return layers


def random_digraph(rng: random.Random, vertices=(4, 8), edges=(6, 14)) -> DigraphInstance:
    nv = rng.randint(*vertices)
    ne = rng.randint(*edges)
    s, t = rng.sample(range(nv), 2)
    es = []
    for _ in range(ne):
        u, v = rng.sample(range(nv), 2)
        es.append((u, v))
    return DigraphInstance(nv, tuple(es), s, t)


def random_dag(rng: random.Random, nv: int, ne: int) -> DigraphInstance:
    """Random DAG on vertices ordered 0..nv-1 with s = 0, t = nv-1 reachable."""
    while True:
        es = []
        for _ in range(ne):
            u, v = sorted(rng.sample(range(nv), 2))
            es.append((u, v))
        g = nx.DiGraph(es)
        if g.has_node(0) and g.has_node(nv - 1) and nx.has_path(g, 0, nv - 1):
            return DigraphInstance(nv, tuple(es), 0, nv - 1)


def flow_lex_objective(inst: DigraphInstance, n: int) -> int | None:
    """Optimal weighted-compression value for n s-t paths, by convex min-cost flow.

    Each edge becomes n unit arcs with costs (d+1)^0, ..., (d+1)^(n-1); the
    k-th unit of flow through an edge pays for the k-th compression layer.
    """
    d = len(inst.edges)
    g = nx.MultiDiGraph()
    g.add_nodes_from(range(inst.num_vertices))
    g.nodes[inst.s]["demand"] = -n
    g.nodes[inst.t]["demand"] = n
    for u, v in inst.edges:
        for k in range(n):
            g.add_edge(u, v, capacity=1, weight=(d + 1) ** k)
    try:
        cost, _ = nx.network_simplex(g)
    except nx.NetworkXUnfeasible:
        return None
    return cost


def random_bipartite(rng: random.Random, side: int, num_edges: int) -> BipartiteInstance:
    edges = tuple((rng.randrange(side), rng.randrange(side)) for _ in range(num_edges))
    return BipartiteInstance(side, side, edges)


def bipartite_flow_lex_objective(inst: BipartiteInstance, n: int) -> int | None:
    """Same as flow_lex_objective for n perfect matchings: every vertex carries n units."""
    d = len(inst.edges)
    g = nx.MultiDiGraph()
    g.add_node("src", demand=-n * inst.left)
    g.add_node("snk", demand=n * inst.right)
    for u in range(inst.left):
        g.add_edge("src", ("l", u), capacity=n, weight=0)
    for v in range(inst.right):
        g.add_edge(("r", v), "snk", capacity=n, weight=0)
    for u, v in inst.edges:
        for k in range(n):
            g.add_edge(("l", u), ("r", v), capacity=1, weight=(d + 1) ** k)
    try:
        cost, _ = nx.network_simplex(g)
    except nx.NetworkXUnfeasible:
        return None
    return cost

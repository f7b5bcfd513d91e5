"""Brute-force reference implementations used only by the tests.

Nothing here touches the backtracking engine: every answer comes from plain
enumeration of maps, subsets or permutations.
"""

from fractions import Fraction
from itertools import combinations, permutations, product

import networkx as nx

from vtcores.graphs import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((pos[u], pos[v]) for u, v in h.edges()))


def preserves(x: Graph, y: Graph, m) -> bool:
    return all(m[v] in y.adj[m[u]] for u, v in x.edges())


def hom_exists(x: Graph, y: Graph) -> bool:
    return any(preserves(x, y, m) for m in product(range(y.n), repeat=x.n))


def count_homs(x: Graph, y: Graph) -> int:
    return sum(1 for m in product(range(y.n), repeat=x.n) if preserves(x, y, m))


def core_subset(x: Graph) -> tuple[int, ...]:
    """Smallest vertex subset ``S`` with a homomorphism ``x -> x[S]``.

    Every subset of every size is tried in order, and for each subset every
    map into it.
    """
    for k in range(1, x.n):
        for s in combinations(range(x.n), k):
            if any(preserves(x, x, m) for m in product(s, repeat=x.n)):
                return s
    return tuple(range(x.n))


def automorphisms(x: Graph) -> list[tuple[int, ...]]:
    return [p for p in permutations(range(x.n)) if preserves(x, x, p)]


def rank_fractions(rows) -> int:
    a = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c] != 0:
                f = a[i][c] / a[rank][c]
                a[i] = [p - f * q for p, q in zip(a[i], a[rank])]
        rank += 1
    return rank


def small_connected_graphs(max_n: int = 6) -> list[Graph]:
    """All connected graphs on 1..max_n vertices up to isomorphism (networkx atlas)."""
    return [
        from_nx(h)
        for h in nx.graph_atlas_g()
        if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h)
    ]

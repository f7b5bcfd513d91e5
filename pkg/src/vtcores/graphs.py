"""Finite simple graphs on vertices ``0..n-1`` with constructors and products.

Product graphs encode the pair ``(x, i)`` as the single index ``x * m + i``
where ``m`` is the order of the second factor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from ._backtrack import Budget, first, solve


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency sets, got {len(self.adj)}")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nb:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise ValueError(f"adjacency not symmetric on {{{u}, {v}}}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        n = len(masks)
        return cls(n, tuple(frozenset(v for v in range(n) if m >> v & 1) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in nb) for nb in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class VertexPartition:
    """Ordered list of disjoint nonempty blocks covering ``range(n)``."""

    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & b:
                raise ValueError(f"blocks overlap on {sorted(seen & b)}")
            seen |= b
        if seen != set(range(self.n)):
            raise ValueError(f"blocks do not cover all {self.n} vertices")

    @classmethod
    def of(cls, n: int, blocks: Iterable[Iterable[int]]) -> "VertexPartition":
        return cls(n, tuple(frozenset(b) for b in blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> list[int]:
        where = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                where[v] = i
        return where

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]


# --- constructors -----------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, tuple(frozenset() for _ in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(frozenset(u for u in range(n) if u != v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def circulant_graph(n: int, steps: Iterable[int]) -> Graph:
    """Circulant on ``Z_n``: ``i ~ i ± s`` for every step ``s``."""
    steps = {s % n for s in steps} | {(-s) % n for s in steps}
    if 0 in steps:
        raise ValueError("step 0 would create loops")
    return Graph.from_edges(n, ((i, (i + s) % n) for i in range(n) for s in steps))


def complete_multipartite_graph(*sizes: int) -> Graph:
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return complete_multipartite_graph(a, b)


def cocktail_party_graph(m: int) -> Graph:
    """K_{m x 2}: vertices ``2i`` and ``2i+1`` form the i-th non-adjacent pair."""
    return complete_multipartite_graph(*([2] * m))


def kneser_graph(n: int, k: int) -> tuple[Graph, list[tuple[int, ...]]]:
    subsets = list(combinations(range(n), k))
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return Graph.from_edges(len(subsets), edges), subsets


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``g`` and the edge of ``g`` behind each new vertex."""
    edges = g.edges()
    if not edges:
        raise ValueError("line graph of an edgeless graph is empty")
    at: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for i, (u, v) in enumerate(edges):
        at[u].append(i)
        at[v].append(i)
    pairs = {(i, j) for inc in at.values() for i, j in combinations(inc, 2)}
    return Graph.from_edges(len(edges), pairs), edges


# --- operations -------------------------------------------------------------


def complement(g: Graph) -> Graph:
    everyone = frozenset(range(g.n))
    return Graph(g.n, tuple(everyone - nb - {v} for v, nb in enumerate(g.adj)))


def disjoint_union(x: Graph, y: Graph) -> Graph:
    shifted = tuple(frozenset(u + x.n for u in nb) for nb in y.adj)
    return Graph(x.n + y.n, x.adj + shifted)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled by sorted position."""
    vs = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(vs)}
    return Graph(len(vs), tuple(frozenset(pos[u] for u in g.adj[v] if u in pos) for v in vs))


def lexicographic_product(x: Graph, y: Graph) -> Graph:
    """X[Y]: ``(a, i) ~ (b, j)`` iff ``a ~ b``, or ``a == b`` and ``i ~ j``."""
    m = y.n
    adj = []
    for a in range(x.n):
        blown = frozenset(b * m + j for b in x.adj[a] for j in range(m))
        for i in range(m):
            adj.append(blown | {a * m + j for j in y.adj[i]})
    return Graph(x.n * m, tuple(adj))


def multiple(x: Graph, m: int) -> Graph:
    """X[complement(K_m)]: every vertex replaced by an independent m-set."""
    if m < 1:
        raise ValueError("multiple needs m >= 1")
    return lexicographic_product(x, empty_graph(m))


def is_regular(g: Graph) -> int | None:
    """Common valency, or ``None`` if degrees differ (0 for empty vertex set)."""
    degs = set(g.degrees())
    if len(degs) > 1:
        return None
    return degs.pop() if degs else 0


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_homomorphism_map(x: Graph, y: Graph, mapping: Sequence[int]) -> bool:
    """Plain edge-by-edge adjacency check, independent of any search."""
    if len(mapping) != x.n or any(not 0 <= t < y.n for t in mapping):
        return False
    return all(mapping[v] in y.adj[mapping[u]] for u, v in x.edges())


def is_isomorphism_map(x: Graph, y: Graph, mapping: Sequence[int]) -> bool:
    if x.n != y.n or x.num_edges != y.num_edges:
        return False
    if sorted(mapping) != list(range(y.n)):
        return False
    return is_homomorphism_map(x, y, mapping)


def _degree_signature(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    degs = g.degrees()
    return [(degs[v], tuple(sorted(degs[u] for u in g.adj[v]))) for v in range(g.n)]


def is_isomorphic(x: Graph, y: Graph, budget: Budget | None = None) -> tuple[int, ...] | None:
    """An isomorphism ``x -> y`` as a vertex map, or ``None``.

    Candidates for each vertex are restricted to target vertices with the same
    degree and the same multiset of neighbour degrees.
    """
    if x.n != y.n or x.num_edges != y.num_edges:
        return None
    sx, sy = _degree_signature(x), _degree_signature(y)
    if Counter(sx) != Counter(sy):
        return None
    by_sig: dict = {}
    for t, s in enumerate(sy):
        by_sig[s] = by_sig.get(s, 0) | (1 << t)
    domains = [by_sig[s] for s in sx]
    return first(solve(x.masks, y.masks, domains, injective=True, induced=True, budget=budget))


def cliques_of_size(g: Graph, k: int) -> list[frozenset[int]]:
    """All ``k``-cliques, in lexicographic order of their sorted vertices."""
    out: list[frozenset[int]] = []
    masks = g.masks

    def grow(clique: list[int], cand: int) -> None:
        if len(clique) == k:
            out.append(frozenset(clique))
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # only larger vertices remain in cand, so each clique is built once
            grow(clique + [v], cand & masks[v])

    if k == 0:
        return [frozenset()]
    grow([], (1 << g.n) - 1)
    return out


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting; result sorted by sorted vertex tuple."""
    masks = g.masks
    out: list[frozenset[int]] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(frozenset(v for v in range(g.n) if r >> v & 1))
            return
        pivot = max((u for u in range(g.n) if (p | x) >> u & 1), key=lambda u: bin(p & masks[u]).count("1"))
        cand = p & ~masks[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            bk(r | low, p & masks[v], x & masks[v])
            p &= ~low
            x |= low

    if g.n:
        bk(0, (1 << g.n) - 1, 0)
    return sorted(out, key=lambda c: sorted(c))

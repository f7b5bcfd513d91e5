"""Constructions and certificate checks for core partitions of vertex-transitive graphs.

Every routine here builds an explicit object (a partition, an isomorphism, a
homomorphism, a quotient matrix) and re-checks it with the plain predicates
from :mod:`vtcores.graphs`. A failed re-check raises
:class:`CertificateError`, which always means a bug in this package rather
than a counterexample to the underlying mathematics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

from ._backtrack import Budget, ensure_budget, solve
from .exact_cover import find_exact_cover
from .graphs import (
    Graph,
    VertexPartition,
    cliques_of_size,
    complete_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_homomorphism_map,
    is_isomorphic,
    is_isomorphism_map,
    is_regular,
    lexicographic_product,
    line_graph,
    maximal_cliques,
    multiple,
)
from .groups import (
    ConnectionSet,
    FiniteGroup,
    cayley_graph,
    is_normal_connection_set,
    right_coset_translate,
    right_translation,
)
from .homs import Core, Homomorphism, find_core, fibres, is_core
from .linalg import eigenvalue_multiplicity
from .symmetry import DEFAULT_AUT_CAP, automorphism_group, is_arc_transitive, is_vertex_transitive


class CertificateError(RuntimeError):
    """A constructed certificate failed its independent re-check."""


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


def _relabel(mapping: dict[int, int]) -> list[list[int]]:
    return [[k, mapping[k]] for k in sorted(mapping)]


# --- translates of a core in a Cayley graph -----------------------------------


@dataclass(frozen=True)
class CayleyLemmaReport:
    base_vertex: int
    fibre: tuple[int, ...]
    translates: tuple[frozenset[int], ...]
    disjoint: bool

    def to_dict(self) -> dict:
        return {
            "base_vertex": self.base_vertex,
            "fibre": list(self.fibre),
            "translates": [sorted(t) for t in self.translates],
            "pairwise_disjoint": self.disjoint,
        }


def check_cayley_lemma_disjointness(
    group: FiniteGroup,
    conn: ConnectionSet,
    h: Homomorphism,
    y: int,
    budget: Budget | int | None = None,
) -> CayleyLemmaReport:
    """Check that the sets ``V(Y) a^-1`` for ``a`` in ``h^-1(y)`` are disjoint.

    ``h`` must be an endomorphism of ``cayley_graph(group, conn)`` whose image
    ``Y`` is a core and ``y`` a vertex of that image.
    """
    x = cayley_graph(group, conn)
    if h.source != x or h.target != x:
        raise ValueError("h is not an endomorphism of this Cayley graph")
    image = sorted(h.image)
    if y not in h.image:
        raise ValueError(f"{y} is not in the image of h")
    if not is_core(induced_subgraph(x, image), budget):
        raise ValueError("image of h is not a core")
    fib = tuple(sorted(fibres(h)[y]))
    translates = tuple(right_coset_translate(group, image, a) for a in fib)
    disjoint = sum(len(t) for t in translates) == len(frozenset().union(*translates))
    return CayleyLemmaReport(y, fib, translates, disjoint)


@dataclass(frozen=True)
class NormalCayleyPartition:
    graph: Graph
    core: Core
    lemma: CayleyLemmaReport
    partition: VertexPartition
    block_maps: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "order": self.graph.n,
            "core_order": self.core.graph.n,
            "core_vertices": self.core.vertices,
            "retraction": list(self.core.retraction.map),
            "lemma": self.lemma.to_dict(),
            "blocks": self.partition.as_lists(),
            "block_isomorphisms_from_core": [list(m) for m in self.block_maps],
        }


def core_partition_normal_cayley(
    group: FiniteGroup, conn: ConnectionSet, budget: Budget | int | None = None
) -> NormalCayleyPartition:
    """Partition a normal Cayley graph into right translates of its core.

    With ``phi`` the retraction onto the core ``Y`` and ``y`` the least core
    vertex, the blocks are ``V(Y) a^-1`` for ``a`` in ``phi^-1(y)``. Each
    block is the image of ``V(Y)`` under the right translation by ``a^-1``.
    """
    if not is_normal_connection_set(group, conn):
        raise ValueError("connection set is not closed under conjugation")
    budget = ensure_budget(budget)
    x = cayley_graph(group, conn)
    core = find_core(x, budget)
    y = core.vertices[0]
    lemma = check_cayley_lemma_disjointness(group, conn, core.retraction.hom, y, budget)
    if not lemma.disjoint:
        raise CertificateError("core translates overlap")
    try:
        partition = VertexPartition(x.n, lemma.translates)
    except ValueError as exc:
        raise CertificateError(f"translates do not partition the vertex set: {exc}") from None
    block_maps = []
    for a in lemma.fibre:
        shift = right_translation(group, group.inv[a])
        block = sorted(shift[v] for v in core.vertices)
        pos = {v: i for i, v in enumerate(block)}
        translated = tuple(shift[v] for v in core.vertices)
        sub = induced_subgraph(x, block)
        as_positions = tuple(pos[v] for v in translated)
        if not is_isomorphism_map(core.graph, sub, as_positions) or is_isomorphic(core.graph, sub, budget) is None:
            raise CertificateError(f"block {block} does not induce a copy of the core")
        block_maps.append(translated)
    return NormalCayleyPartition(x, core, lemma, partition, tuple(block_maps))


# --- equitable partitions and spectra --------------------------------------------


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.entries)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def equitable_check(x: Graph, p: VertexPartition) -> QuotientMatrix | None:
    """Quotient matrix of ``p`` if it is equitable, else ``None``."""
    if p.n != x.n:
        raise ValueError("partition is on a different vertex count")
    where = p.block_of()
    k = len(p.blocks)
    rows = []
    for i, block in enumerate(p.blocks):
        counts = None
        for v in block:
            c = [0] * k
            for u in x.adj[v]:
                c[where[u]] += 1
            if counts is None:
                counts = c
            elif c != counts:
                return None
        rows.append(tuple(counts))
    return QuotientMatrix(tuple(rows))


@dataclass(frozen=True)
class SpectrumReport:
    d: int
    d1: int
    eigenvalues: tuple[int, int]
    multiplicities: tuple[int, int]

    @property
    def certified(self) -> bool:
        return all(m > 0 for m in self.multiplicities) and self.eigenvalues[1] >= 0

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "d1": self.d1,
            "quotient_eigenvalues": list(self.eigenvalues),
            "adjacency_nullities": list(self.multiplicities),
            "certified": self.certified,
        }


def quotient_spectrum_check(x: Graph, q: QuotientMatrix) -> SpectrumReport:
    """Test ``d`` and ``2 d1 - d`` for membership in the adjacency spectrum.

    ``q`` must be ``[[d1, d - d1], [d - d1, d1]]``. Membership is decided by
    the exact nullity of ``A - lambda I``.
    """
    if q.k != 2:
        raise ValueError("expected a 2x2 quotient matrix")
    (a, b), (c, e) = q.entries
    if a != e or b != c:
        raise ValueError("quotient matrix does not have the half-size form")
    d, d1 = a + b, a
    lams = (d, 2 * d1 - d)
    mults = tuple(eigenvalue_multiplicity(x, lam) for lam in lams)
    return SpectrumReport(d, d1, lams, mults)


# --- half-size cores -------------------------------------------------------------


@dataclass(frozen=True)
class HalfSizeReport:
    d: int
    d1: int
    x1: tuple[int, ...]
    x2: tuple[int, ...]
    retraction: tuple[int, ...]
    iso_x1_x2: dict[int, int]
    restriction_is_isomorphism: bool
    cross_graph: Graph
    cross_regular_degree: int | None
    cross_edges_lift: bool
    quotient: QuotientMatrix | None
    cross_graph_vertex_transitive: bool | None = None

    @property
    def certified(self) -> bool:
        return (
            bool(self.iso_x1_x2)
            and self.restriction_is_isomorphism
            and self.cross_regular_degree == self.d - self.d1
            and self.cross_edges_lift
            and self.quotient is not None
            and self.quotient.entries == ((self.d1, self.d - self.d1), (self.d - self.d1, self.d1))
        )

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "d1": self.d1,
            "x1": list(self.x1),
            "x2": list(self.x2),
            "retraction": list(self.retraction),
            "iso_x2_to_x1": _relabel(self.iso_x1_x2),
            "x1_isomorphic_x2": bool(self.iso_x1_x2),
            "restriction_is_isomorphism": self.restriction_is_isomorphism,
            "cross_edges": [list(e) for e in self.cross_graph.edges()],
            "cross_regular_degree": self.cross_regular_degree,
            "cross_edges_lift_from_x2": self.cross_edges_lift,
            "quotient_matrix": None if self.quotient is None else self.quotient.as_lists(),
            "cross_graph_vertex_transitive": self.cross_graph_vertex_transitive,
            "certified": self.certified,
        }


def cross_graph(x: Graph, side: frozenset[int]) -> Graph:
    """Bipartite graph of the edges of ``x`` with exactly one end in ``side``."""
    return Graph.from_edges(x.n, ((u, v) for u, v in x.edges() if (u in side) != (v in side)))


def half_size_structure(x: Graph, budget: Budget | int | None = None, core: Core | None = None) -> HalfSizeReport:
    """Certify the structure of a vertex-transitive graph whose core is half its size.

    With ``X1`` the core, ``phi`` the retraction onto it and ``X2`` the other
    half: ``X2`` is isomorphic to ``X1`` (an isomorphism is searched for
    independently), ``phi`` restricted to ``X2`` is an isomorphism onto
    ``X1``, and the cross edges form a ``(d - d1)``-regular bipartite graph
    in which every edge ``{u, phi(w)}`` comes from an edge ``u ~ w`` of
    ``X2``.
    """
    budget = ensure_budget(budget)
    if not is_vertex_transitive(x, budget):
        raise ValueError("graph is not vertex transitive")
    if core is None:
        core = find_core(x, budget)
    if 2 * core.graph.n != x.n:
        raise ValueError(f"core has order {core.graph.n}, not half of {x.n}")
    phi = core.retraction.map
    x1 = tuple(core.vertices)
    s1 = frozenset(x1)
    x2 = tuple(v for v in range(x.n) if v not in s1)
    d = is_regular(x)
    d1 = is_regular(core.graph)

    g1, g2 = induced_subgraph(x, x1), induced_subgraph(x, x2)
    found = is_isomorphic(g2, g1, budget)
    iso = {} if found is None else {x2[i]: x1[found[i]] for i in range(len(x2))}

    restricted = [phi[v] for v in x2]
    restriction_ok = (
        sorted(restricted) == list(x1)
        and all(phi[w] in x.adj[phi[u]] for u in x2 for w in x.adj[u] if w not in s1)
        and g1.num_edges == g2.num_edges
    )

    cg = cross_graph(x, s1)
    lift_ok = restriction_ok
    if restriction_ok:
        back = {phi[v]: v for v in x2}
        for u, w in cg.edges():
            inner, outer = (u, w) if u in s1 else (w, u)
            # cross edge {outer, inner} must come from outer ~ back[inner] inside X2
            if back[inner] not in x.adj[outer]:
                lift_ok = False
                break
    q = equitable_check(x, VertexPartition.of(x.n, [x1, x2]))
    cg_vt = is_vertex_transitive(cg, budget)
    return HalfSizeReport(d, d1, x1, x2, phi, iso, restriction_ok, cg, is_regular(cg), lift_ok, q, cg_vt)


# --- self-core test on 2p vertices -------------------------------------------------


@dataclass(frozen=True)
class SelfCoreReport:
    status: Literal["certified_core", "inconclusive"]
    p: int
    d: int
    reasons: tuple[str, ...]
    eigenvalues_tested: dict[int, bool] = field(default_factory=dict)
    interpretation: str = (
        "lambda = d is excluded from the tested range; connectivity is required so that "
        "2*d1 - d = d (two disjoint core copies) cannot occur"
    )

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "p": self.p,
            "d": self.d,
            "reasons": list(self.reasons),
            "eigenvalues_tested": {str(k): v for k, v in sorted(self.eigenvalues_tested.items())},
            "interpretation": self.interpretation,
        }


def self_core_by_spectral_test(x: Graph, budget: Budget | int | None = None) -> SelfCoreReport:
    """Decide by divisibility and spectrum that a graph on ``2p`` vertices is a core.

    The core order divides ``2p``. Order 1 is ruled out by an edge, order 2
    by non-bipartiteness, and order ``p`` by the absence of an integer
    eigenvalue ``0 <= lambda < d`` with ``lambda = d (mod 2)``. Never
    concludes that the graph is *not* a core.
    """
    if x.n % 2 or not _is_prime(x.n // 2):
        raise ValueError(f"vertex count {x.n} is not twice a prime")
    if not is_vertex_transitive(x, budget):
        raise ValueError("graph is not vertex transitive")
    p, d = x.n // 2, is_regular(x)
    if d == 0:
        return SelfCoreReport("inconclusive", p, d, ("edgeless graph has core K_1",))
    reasons = []
    if is_bipartite(x):
        reasons.append("bipartite: core may be K_2")
    if not is_connected(x):
        reasons.append("disconnected: a half-size core with d1 = d is not excluded")
    tested = {lam: eigenvalue_multiplicity(x, lam) > 0 for lam in range(d % 2, d, 2)}
    hits = [lam for lam, hit in tested.items() if hit]
    if hits:
        reasons.append(f"eigenvalues of the parity of d below d: {hits}")
    if reasons:
        return SelfCoreReport("inconclusive", p, d, tuple(reasons), tested)
    return SelfCoreReport(
        "certified_core",
        p,
        d,
        ("non-bipartite, connected, no eigenvalue lambda with 0 <= lambda < d of the parity of d",),
        tested,
    )


# --- line graphs of even complete graphs --------------------------------------


def _round_robin_colour(n2: int, u: int, v: int) -> int:
    """Colour of edge ``{u, v}`` of K_{n2} (n2 even) in the rotational 1-factorisation."""
    k = n2 - 1
    if v == k:
        return u
    if u == k:
        return v
    return (u + v) * pow(2, -1, k) % k


@dataclass(frozen=True)
class LineGraphReport:
    n: int
    order: int
    core_order: int
    colouring: Homomorphism
    clique: Homomorphism
    max_cliques: tuple[frozenset[int], ...]
    all_stars: bool
    pairwise_intersecting: bool
    exact_cover_checked: bool
    exact_cover_partition: VertexPartition | None = None
    search_core_isomorphic: bool | None = None

    @property
    def certified(self) -> bool:
        ok = self.all_stars and self.pairwise_intersecting and len(self.max_cliques) == 2 * self.n
        if self.exact_cover_checked:
            ok = ok and self.exact_cover_partition is None
        if self.search_core_isomorphic is not None:
            ok = ok and self.search_core_isomorphic
        return ok

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "graph": f"L(K_{2 * self.n})",
            "order": self.order,
            "core": f"K_{self.core_order}",
            "core_order": self.core_order,
            "order_ratio": self.order // self.core_order,
            "colouring_to_core": list(self.colouring.map),
            "clique_from_core": list(self.clique.map),
            "maximum_cliques": [sorted(c) for c in self.max_cliques],
            "all_maximum_cliques_are_stars": self.all_stars,
            "maximum_cliques_pairwise_intersect": self.pairwise_intersecting,
            "exact_cover_checked": self.exact_cover_checked,
            "exact_cover_partition": (
                None if self.exact_cover_partition is None else self.exact_cover_partition.as_lists()
            ),
            "search_core_isomorphic_to_clique": self.search_core_isomorphic,
            "certified": self.certified,
        }


def verify_line_graph_counterexample(
    n: int,
    exact_cover: bool | None = None,
    search_core: bool | None = None,
    budget: Budget | int | None = None,
) -> LineGraphReport:
    """Show that L(K_{2n}) has core K_{2n-1} but no partition into core copies.

    The colouring of the 1-factorisation of K_{2n} and the star at vertex 0
    give homomorphisms in both directions. The maximum cliques are the ``2n``
    vertex stars, which pairwise share an edge, so no two core copies are
    disjoint. By default the exact-cover search and the core search are run
    for ``n == 3`` only.
    """
    if n < 3:
        raise ValueError(
            "n must be at least 3: for n = 2 the triangles of L(K_4) not at a vertex "
            "are maximum cliques too, and L(K_4) does split into two of them"
        )
    budget = ensure_budget(budget)
    kn = complete_graph(2 * n)
    lg, edges = line_graph(kn)
    k = 2 * n - 1
    target = complete_graph(k)
    colouring = Homomorphism(lg, target, tuple(_round_robin_colour(2 * n, u, v) for u, v in edges))
    star = [i for i, e in enumerate(edges) if 0 in e]
    clique = Homomorphism(target, lg, tuple(star))
    if not is_core(target, budget):
        raise CertificateError(f"K_{k} failed the core check")
    cliques = maximal_cliques(lg)
    top = max(len(c) for c in cliques)
    maxc = tuple(c for c in cliques if len(c) == top)
    if top != k:
        raise CertificateError(f"clique number {top}, expected {k}")
    all_stars = all(set.intersection(*(set(edges[i]) for i in c)) for c in maxc)
    intersecting = all(a & b for a, b in combinations(maxc, 2))
    run_cover = n == 3 if exact_cover is None else exact_cover
    run_core = n == 3 if search_core is None else search_core
    part = core_partition_search(lg, budget, core_graph=target) if run_cover else None
    core_iso = None
    if run_core:
        core_iso = is_isomorphic(find_core(lg, budget).graph, target, budget) is not None
    return LineGraphReport(
        n, lg.n, k, colouring, clique, maxc, all_stars, intersecting, run_cover, part, core_iso
    )


# --- partition into induced core copies by exact cover -----------------------------


def induced_copies(pattern: Graph, host: Graph, budget: Budget | int | None = None) -> list[frozenset[int]]:
    """Vertex sets of ``host`` inducing a copy of ``pattern``, each listed once."""
    budget = ensure_budget(budget)
    if pattern.num_edges == pattern.n * (pattern.n - 1) // 2:
        return cliques_of_size(host, pattern.n)
    seen = set()
    for m in solve(pattern.masks, host.masks, injective=True, induced=True, budget=budget):
        seen.add(frozenset(m))
    return sorted(seen, key=sorted)


def core_partition_search(
    x: Graph, budget: Budget | int | None = None, core_graph: Graph | None = None
) -> VertexPartition | None:
    """Partition ``V(x)`` into sets inducing copies of the core, or ``None``.

    ``None`` is definitive: the exact-cover search over all induced copies
    was exhausted.
    """
    budget = ensure_budget(budget)
    y = find_core(x, budget).graph if core_graph is None else core_graph
    if y.n == x.n:
        return VertexPartition.of(x.n, [range(x.n)])
    if x.n % y.n:
        return None
    copies = induced_copies(y, x, budget)
    chosen = find_exact_cover(range(x.n), copies, budget)
    if chosen is None:
        return None
    part = VertexPartition.of(x.n, [copies[i] for i in chosen])
    for b in part.blocks:
        if is_isomorphic(induced_subgraph(x, b), y, budget) is None:
            raise CertificateError(f"block {sorted(b)} is not a core copy")
    return part


# --- arc-transitive graphs with half-size cores -----------------------------------


@dataclass(frozen=True)
class ArcClassification:
    kind: Literal["disjoint_copies", "lexicographic", "not_applicable"]
    reason: str
    d: int | None = None
    d1: int | None = None
    core_vertices: tuple[int, ...] = ()
    isomorphism: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "reason": self.reason,
            "d": self.d,
            "d1": self.d1,
            "core_vertices": list(self.core_vertices),
            "isomorphism": None if self.isomorphism is None else list(self.isomorphism),
        }


def arc_transitive_half_size_classify(x: Graph, budget: Budget | int | None = None) -> ArcClassification:
    """Split arc-transitive graphs with half-size core into the two possible shapes.

    ``d == d1``: ``x`` is two disjoint copies of its core ``Y``; the map
    certifies ``x ~= Y + Y``. ``d == 2 d1``: the map certifies
    ``x ~= Y[complement(K_2)]`` with core vertex ``v -> (v, 0)`` and the
    other half ``w -> (phi(w), 1)``.
    """
    budget = ensure_budget(budget)
    if x.num_edges == 0 or not is_arc_transitive(x, budget):
        return ArcClassification("not_applicable", "graph is not arc transitive")
    core = find_core(x, budget)
    if 2 * core.graph.n != x.n:
        return ArcClassification(
            "not_applicable", f"core has order {core.graph.n}, not {x.n // 2}",
            core_vertices=tuple(core.vertices),
        )
    d, d1 = is_regular(x), is_regular(core.graph)
    if d1 == 0 or d % d1:
        raise CertificateError(f"core valency {d1} does not divide valency {d}")
    phi = core.retraction.map
    verts = core.vertices
    pos = {v: i for i, v in enumerate(verts)}
    side = frozenset(verts)
    k = len(verts)
    if d == d1:
        if cross_graph(x, side).num_edges:
            raise CertificateError("d == d1 but cross edges exist")
        iso = tuple(pos[v] if v in side else k + pos[phi[v]] for v in range(x.n))
        target = disjoint_union(core.graph, core.graph)
        kind, reason = "disjoint_copies", "d == d1: two disjoint copies of the core"
    elif d == 2 * d1:
        iso = tuple(2 * pos[v] if v in side else 2 * pos[phi[v]] + 1 for v in range(x.n))
        target = lexicographic_product(core.graph, empty_graph(2))
        kind, reason = "lexicographic", "d == 2*d1: lexicographic product of the core with complement(K_2)"
    else:
        raise CertificateError(f"valency {d} exceeds twice the core valency {d1}")
    if not is_isomorphism_map(x, target, iso):
        raise CertificateError(f"{kind} map is not an isomorphism")
    return ArcClassification(kind, reason, d, d1, tuple(verts), iso)


# --- Cayley multiples and lifted endomorphisms -------------------------------------


@dataclass(frozen=True)
class SabidussiResult:
    m: int
    group: FiniteGroup
    conn: ConnectionSet
    iso: tuple[int, ...]
    cayley: Graph

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "group_order": self.group.order,
            "connection_set": sorted(self.conn.elements),
            "connection_set_size": len(self.conn),
            "cayley_order": self.cayley.n,
            "isomorphism_to_multiple": list(self.iso),
        }


def sabidussi_multiple(x: Graph, cap: int = DEFAULT_AUT_CAP, budget: Budget | int | None = None) -> SabidussiResult:
    """Exhibit ``multiple(x, m)`` as a Cayley graph of ``Aut(x)``.

    ``G = Aut(x)``, ``m`` the order of the stabiliser of vertex 0, and
    ``C = {g : g(0) ~ 0}``. The isomorphism sends ``g`` to
    ``(g(0), rank of g among the elements with the same value at 0)``.
    """
    budget = ensure_budget(budget)
    if not is_vertex_transitive(x, budget):
        raise ValueError("graph is not vertex transitive")
    auts = automorphism_group(x, cap, budget).perms
    group = FiniteGroup.from_permutations(auts)
    m = sum(1 for p in auts if p[0] == 0)
    conn = ConnectionSet.of(group, (i for i, p in enumerate(auts) if p[0] in x.adj[0]))
    cay = cayley_graph(group, conn)
    seen: dict[int, int] = {}
    iso = []
    for p in auts:
        r = seen.get(p[0], 0)
        seen[p[0]] = r + 1
        iso.append(p[0] * m + r)
    iso = tuple(iso)
    if not is_isomorphism_map(cay, multiple(x, m), iso):
        raise CertificateError("coset map is not an isomorphism onto the multiple")
    return SabidussiResult(m, group, conn, iso, cay)


def lift_endomorphism_to_multiple(x: Graph, h: Homomorphism, m: int) -> Homomorphism:
    """``(v, i) -> (h(v), 0)`` on ``multiple(x, m)``.

    This is ``h`` applied after the retraction that collapses each blown-up
    independent set onto its first copy.
    """
    if h.source != x or h.target != x:
        raise ValueError("h must be an endomorphism of x")
    z = multiple(x, m)
    return Homomorphism(z, z, tuple(h.map[v // m] * m for v in range(z.n)))


def fibre_sizes_after_lift(x: Graph, h: Homomorphism, m: int) -> tuple[dict[int, int], dict[int, int]]:
    """Original fibre sizes keyed by image vertex, and lifted sizes keyed the same way."""
    lifted = lift_endomorphism_to_multiple(x, h, m)
    orig = fibres(h).sizes()
    lift = {t // m: s for t, s in fibres(lifted).sizes().items()}
    if not is_homomorphism_map(lifted.source, lifted.target, lifted.map):
        raise CertificateError("lifted map is not an endomorphism")
    return orig, lift

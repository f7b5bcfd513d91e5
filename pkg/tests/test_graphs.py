import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import to_nx
from vtcores.graphs import (
    Graph,
    VertexPartition,
    circulant_graph,
    cliques_of_size,
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_isomorphic,
    is_isomorphism_map,
    is_regular,
    kneser_graph,
    lexicographic_product,
    line_graph,
    maximal_cliques,
    multiple,
    path_graph,
    petersen_graph,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def check_invariants(g: Graph):
    for v in range(g.n):
        assert v not in g.adj[v]
        for u in g.adj[v]:
            assert 0 <= u < g.n and v in g.adj[u]


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (frozenset({1}), frozenset()))
    with pytest.raises(ValueError):
        Graph(1, (frozenset({0}),))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_complete_graph():
    assert complete_graph(1).num_edges == 0
    assert complete_graph(3).num_edges == 3
    assert complement(complete_graph(5)) == empty_graph(5)


def test_cycle_graph():
    assert cycle_graph(4).num_edges == 4
    assert not is_bipartite(cycle_graph(5))
    assert is_bipartite(cycle_graph(6))
    assert is_regular(cycle_graph(6)) == 2 and is_connected(cycle_graph(6))
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_line_graph_examples():
    lk4, edges = line_graph(complete_graph(4))
    assert lk4.n == 6 and is_regular(lk4) == 4
    assert is_isomorphic(lk4, Graph.from_edges(6, nx.complete_multipartite_graph(2, 2, 2).edges()))
    assert len(edges) == 6
    assert is_isomorphic(line_graph(cycle_graph(5))[0], cycle_graph(5))
    lk6, _ = line_graph(complete_graph(6))
    assert lk6.n == 15 and is_regular(lk6) == 8
    with pytest.raises(ValueError):
        line_graph(empty_graph(3))


def test_line_graph_matches_networkx():
    for g in (petersen_graph(), complete_graph(5), path_graph(5)):
        lg, edges = line_graph(g)
        ref = nx.line_graph(to_nx(g))
        assert sorted(ref.nodes()) == edges
        for i, j in lg.edges():
            assert ref.has_edge(edges[i], edges[j])
        assert lg.num_edges == ref.number_of_edges()


def test_lexicographic_product_examples():
    c5 = cycle_graph(5)
    assert lexicographic_product(c5, complete_graph(1)) == c5
    assert is_isomorphic(lexicographic_product(complete_graph(2), empty_graph(2)), cycle_graph(4))
    p = lexicographic_product(c5, complement(complete_graph(2)))
    assert p.n == 10 and is_regular(p) == 4


def test_lexicographic_matches_networkx():
    x, y = path_graph(3), cycle_graph(4)
    ref = nx.lexicographic_product(to_nx(x), to_nx(y))
    ours = lexicographic_product(x, y)
    for (a, i), (b, j) in ref.edges():
        assert ours.has_edge(a * y.n + i, b * y.n + j)
    assert ours.num_edges == ref.number_of_edges()


@settings(max_examples=60, deadline=None)
@given(graphs(5), graphs(4))
def test_lexicographic_degree_law(x, y):
    p = lexicographic_product(x, y)
    check_invariants(p)
    for a in range(x.n):
        for i in range(y.n):
            assert p.degree(a * y.n + i) == x.degree(a) * y.n + y.degree(i)


def test_multiple_examples():
    assert multiple(cycle_graph(5), 1) == cycle_graph(5)
    assert is_isomorphic(multiple(complete_graph(2), 3), complete_bipartite_graph(3, 3))
    m = multiple(cycle_graph(4), 2)
    assert m.n == 8 and is_regular(m) == 4
    with pytest.raises(ValueError):
        multiple(cycle_graph(4), 0)


@settings(max_examples=40, deadline=None)
@given(graphs(6), st.integers(1, 4))
def test_multiple_order(x, m):
    z = multiple(x, m)
    check_invariants(z)
    assert z.n == m * x.n
    assert z == lexicographic_product(x, empty_graph(m))


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_constructors_keep_invariants(g):
    for h in (complement(g), disjoint_union(g, g), induced_subgraph(g, range(0, g.n, 2))):
        check_invariants(h)
    assert complement(complement(g)) == g


def test_is_isomorphic_examples():
    assert is_isomorphic(cycle_graph(4), complete_bipartite_graph(2, 2)) is not None
    assert is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))) is None
    kn, _ = kneser_graph(5, 2)
    iso = is_isomorphic(petersen_graph(), kn)
    assert iso is not None and is_isomorphism_map(petersen_graph(), kn, iso)


@settings(max_examples=150, deadline=None)
@given(graphs(7), st.permutations(range(7)))
def test_isomorphic_to_relabelling(g, perm):
    perm = [p for p in perm if p < g.n]
    h = Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))
    iso = is_isomorphic(g, h)
    assert iso is not None and is_isomorphism_map(g, h, iso)


@settings(max_examples=150, deadline=None)
@given(graphs(6), graphs(6))
def test_isomorphism_agrees_with_networkx(a, b):
    assert (is_isomorphic(a, b) is not None) == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_isomorphism_is_equivalence_relation():
    pool = [
        g for g in (
            cycle_graph(4), complete_bipartite_graph(2, 2), path_graph(4), cycle_graph(5),
            complement(cycle_graph(5)), circulant_graph(8, [1, 4]), circulant_graph(8, [3, 4]),
            multiple(complete_graph(2), 2), complete_graph(4), disjoint_union(path_graph(2), path_graph(2)),
        )
    ]
    rel = [[is_isomorphic(a, b) is not None for b in pool] for a in pool]
    for i in range(len(pool)):
        assert rel[i][i]
        for j in range(len(pool)):
            assert rel[i][j] == rel[j][i]
            for k in range(len(pool)):
                if rel[i][j] and rel[j][k]:
                    assert rel[i][k]


def test_induced_subgraph_relabels_sorted():
    g = cycle_graph(6)
    h = induced_subgraph(g, [5, 0, 1])
    assert h.edges() == [(0, 1), (0, 2)]


def test_vertex_partition_validation():
    p = VertexPartition.of(4, [[0, 1], [2, 3]])
    assert p.block_of() == [0, 0, 1, 1]
    with pytest.raises(ValueError):
        VertexPartition.of(4, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError):
        VertexPartition.of(4, [[0, 1], [2]])


@settings(max_examples=80, deadline=None)
@given(graphs(8))
def test_cliques_agree_with_networkx(g):
    ref = sorted(sorted(c) for c in nx.find_cliques(to_nx(g)))
    assert [sorted(c) for c in maximal_cliques(g)] == ref
    for k in (2, 3):
        expect = sum(1 for c in nx.enumerate_all_cliques(to_nx(g)) if len(c) == k)
        assert len(cliques_of_size(g, k)) == expect

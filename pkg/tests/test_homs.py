from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from test_graphs import graphs
from vtcores import Budget, BudgetExceeded
from vtcores.graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    is_homomorphism_map,
    is_isomorphic,
    line_graph,
    multiple,
    petersen_graph,
)
from vtcores.homs import (
    Homomorphism,
    Retraction,
    fibres,
    find_core,
    find_homomorphism,
    find_retraction_to,
    homomorphically_equivalent,
    is_core,
    iter_homomorphisms,
    verify_equal_fibres,
)


def test_find_homomorphism_examples():
    c5 = cycle_graph(5)
    h = find_homomorphism(c5, complete_graph(3))
    assert h is not None and is_homomorphism_map(c5, complete_graph(3), h.map)
    assert find_homomorphism(c5, complete_graph(2)) is None
    assert find_homomorphism(c5, c5).map == tuple(range(5))


def test_homomorphism_validates():
    with pytest.raises(ValueError):
        Homomorphism(complete_graph(2), complete_graph(2), (0, 0))


@settings(max_examples=120, deadline=None)
@given(graphs(5), graphs(4))
def test_hom_existence_matches_enumeration(x, y):
    found = find_homomorphism(x, y)
    assert (found is not None) == oracles.hom_exists(x, y)
    if found is not None:
        assert oracles.preserves(x, y, found.map)


@settings(max_examples=60, deadline=None)
@given(graphs(5), graphs(4))
def test_all_homs_enumerated(x, y):
    ours = {h.map for h in iter_homomorphisms(x, y)}
    assert len(ours) == oracles.count_homs(x, y)


def test_retraction_examples():
    c6 = cycle_graph(6)
    r = find_retraction_to(c6, [0, 1])
    assert r.map == (0, 1, 0, 1, 0, 1)
    assert find_retraction_to(complete_graph(5), [0, 1, 2]) is None

    c4 = cycle_graph(4)
    candidates = [(0, 1, a, b) for a, b in product(range(4), repeat=2)]
    valid = [m for m in candidates if oracles.preserves(c4, c4, m) and set(m) == {0, 1}]
    r = find_retraction_to(c4, [0, 1])
    assert r is not None and r.map in valid
    assert valid == [(0, 1, 0, 1)]


def test_retraction_validates():
    c6 = cycle_graph(6)
    with pytest.raises(ValueError):
        Retraction(Homomorphism(c6, c6, (1, 2, 3, 4, 5, 0)))
    with pytest.raises(ValueError):
        find_retraction_to(c6, [])


def test_find_core_examples():
    for n in range(1, 6):
        core = find_core(complete_graph(n))
        assert core.graph == complete_graph(n)
    core = find_core(cycle_graph(6))
    assert core.graph == complete_graph(2)
    assert find_core(petersen_graph()).graph.n == 10
    assert is_core(petersen_graph())
    assert not is_core(cycle_graph(6))


def test_core_of_edgeless_and_empty():
    assert find_core(Graph.from_edges(4, [])).graph.n == 1
    assert find_core(Graph.from_edges(0, [])).graph.n == 0


def test_homomorphic_equivalence_examples():
    lk6, _ = line_graph(complete_graph(6))
    assert homomorphically_equivalent(lk6, complete_graph(5))
    for x in (cycle_graph(5), petersen_graph()):
        assert homomorphically_equivalent(x, multiple(x, 3))
    c5, c6 = cycle_graph(5), cycle_graph(6)
    assert oracles.hom_exists(c6, c5) and not oracles.hom_exists(c5, c6)
    assert not homomorphically_equivalent(c5, c6)


def test_fibres_and_equal_fibre_report():
    c6 = cycle_graph(6)
    parity = Homomorphism(c6, c6, tuple(v % 2 for v in range(6)))
    assert fibres(parity).sizes() == {0: 3, 1: 3}
    rep = verify_equal_fibres(c6, parity)
    assert rep.equal and rep.expected == 3

    k33 = complete_bipartite_graph(3, 3)
    r = find_retraction_to(k33, [0, 3])
    assert verify_equal_fibres(k33, r.hom).sizes == {0: 3, 3: 3}

    star = complete_bipartite_graph(1, 3)
    r = find_retraction_to(star, [0, 1])
    rep = verify_equal_fibres(star, r.hom)
    assert sorted(rep.sizes.values()) == [1, 3] and not rep.equal

    with pytest.raises(ValueError):
        verify_equal_fibres(c6, Homomorphism(c6, c6, tuple(range(6))))


def test_budget_exhaustion_is_distinct_from_none():
    with pytest.raises(BudgetExceeded):
        find_homomorphism(petersen_graph(), complete_graph(2), Budget(3))
    with pytest.raises(BudgetExceeded) as info:
        find_core(petersen_graph(), Budget(200))
    partial = info.value.partial
    assert partial is not None and isinstance(partial, Retraction)


@settings(max_examples=60, deadline=None)
@given(graphs(7), st.randoms(use_true_random=False))
def test_core_independent_of_labelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))
    a, b = find_core(g), find_core(h)
    assert is_isomorphic(a.graph, b.graph) is not None
    again = find_core(a.graph)
    assert is_isomorphic(again.graph, a.graph) is not None
    r = a.retraction
    assert oracles.preserves(g, g, r.map) and all(r.map[t] == t for t in r.map)
    assert induced_subgraph(g, a.vertices) == a.graph


def test_fibres_equal_on_vertex_transitive_corpus(vt_corpus):
    for name, x in vt_corpus.items():
        core = find_core(x)
        k = core.graph.n
        assert x.n % k == 0, name
        for count, h in enumerate(iter_homomorphisms(x, core.graph)):
            assert set(fibres(h).sizes().values()) == {x.n // k}, name
            if count >= 30:
                break

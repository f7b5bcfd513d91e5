import pytest

from vtcores.graphs import (
    circulant_graph,
    cocktail_party_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    line_graph,
    multiple,
    petersen_graph,
)

_criteria: list[tuple[int, str, bool, str]] = []


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    _criteria.append((number, title, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_criteria):
        mark = "PASS" if ok else "FAIL"
        line = f"[{mark}] criterion {number}: {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)


def vertex_transitive_corpus():
    """Named vertex-transitive graphs used across the suite."""
    c5 = cycle_graph(5)
    return {
        **{f"C{n}": cycle_graph(n) for n in range(3, 13)},
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "K33": complete_bipartite_graph(3, 3),
        "K44": complete_bipartite_graph(4, 4),
        "Petersen": petersen_graph(),
        "L(K4)": line_graph(complete_graph(4))[0],
        "L(K6)": line_graph(complete_graph(6))[0],
        "C5[2]": multiple(c5, 2),
        "C5[3]": multiple(c5, 3),
        "C6[2]": multiple(cycle_graph(6), 2),
        "2C5": disjoint_union(c5, c5),
        "K(3x2)": cocktail_party_graph(3),
        "K(4x2)": cocktail_party_graph(4),
        "Circ8(1,4)": circulant_graph(8, [1, 4]),
        "Circ9(1,3)": circulant_graph(9, [1, 3]),
        "Circ10(1,2,3)": circulant_graph(10, [1, 2, 3]),
        "Circ12(1,6)": circulant_graph(12, [1, 6]),
    }


@pytest.fixture(scope="session")
def vt_corpus():
    return vertex_transitive_corpus()

"""Command-line interface: ``vtcores <command> ...`` prints a JSON run report.

Exit codes: 0 pass, 1 fail, 2 inconclusive (budget or cap exhausted),
3 input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import formats
from ._backtrack import DEFAULT_NODE_BUDGET, Budget, BudgetExceeded
from .graphs import (
    Graph,
    VertexPartition,
    induced_subgraph,
    is_homomorphism_map,
    is_isomorphic,
    is_isomorphism_map,
    is_regular,
    multiple,
)
from .groups import (
    ConnectionSet,
    FiniteGroup,
    GroupTooLarge,
    cayley_graph,
    group_from_permutations,
    is_normal_connection_set,
    left_translation,
)
from .homs import find_core, is_core
from .symmetry import DEFAULT_AUT_CAP, AutomorphismOverflow, is_automorphism
from .theorems import (
    CertificateError,
    arc_transitive_half_size_classify,
    core_partition_normal_cayley,
    core_partition_search,
    equitable_check,
    half_size_structure,
    quotient_spectrum_check,
    sabidussi_multiple,
    self_core_by_spectral_test,
    verify_line_graph_counterexample,
)

EXIT = {"pass": 0, "fail": 1, "inconclusive": 2, "input_error": 3}


class InputError(Exception):
    pass


def load_graph(spec: str) -> Graph:
    """A file path (graph6 or edge list), or else a literal graph6 string."""
    path = Path(spec)
    try:
        if path.is_file():
            return formats.read_graph(path)
        return formats.from_graph6(spec)
    except ValueError as exc:
        raise InputError(f"cannot read graph {spec!r}: {exc}") from None


def _split_items(text: str) -> list[str]:
    items, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in ",;" and depth == 0:
            items.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur).strip())
    return [i for i in items if i]


_WORD = re.compile(r"g(\d+)(?:\^(-?\d+))?")


def parse_element(group: FiniteGroup, gens: list[tuple[int, ...]], item: str) -> int:
    """Element index from an index, a cycle-notation permutation, or a word ``g0 g1^-1``."""
    item = item.strip()
    if re.fullmatch(r"\d+", item):
        e = int(item)
        if e >= group.order:
            raise InputError(f"element index {e} out of range for order {group.order}")
        return e
    if item.startswith("("):
        perm = formats.parse_cycles(item, degree=len(gens[0]))
        return group.index_of(perm)
    tokens = [t for t in re.split(r"[\s*]+", item) if t]
    if not tokens:
        raise InputError(f"empty group word {item!r}")
    out = group.identity
    for tok in tokens:
        m = _WORD.fullmatch(tok)
        if not m or int(m.group(1)) >= len(gens):
            raise InputError(f"bad generator token {tok!r}")
        g = group.index_of(gens[int(m.group(1))])
        power = int(m.group(2) or 1)
        base = g if power >= 0 else group.inv[g]
        for _ in range(abs(power)):
            out = group.mul[out][base]
    return out


def parse_connection_set(group: FiniteGroup, gens, text: str, close: bool = False) -> ConnectionSet:
    """Items separated by ``,`` or ``;``; ``class:ITEM`` expands to a conjugacy class."""
    elements: set[int] = set()
    for item in _split_items(text):
        if item.startswith("class:"):
            elements |= group.conjugacy_class(parse_element(group, gens, item[6:]))
        else:
            elements.add(parse_element(group, gens, item))
    if close:
        return ConnectionSet.closure(group, elements)
    return ConnectionSet.of(group, elements)


def load_cayley(args) -> tuple[FiniteGroup, ConnectionSet]:
    if not args.group or args.connection is None:
        raise InputError("--group and --connection are required")
    try:
        gens = formats.read_generators(args.group)
        group = group_from_permutations(gens)
        return group, parse_connection_set(group, gens, args.connection, args.close)
    except OSError as exc:
        raise InputError(str(exc)) from None
    except GroupTooLarge as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None


def describe(g: Graph) -> dict:
    return {"order": g.n, "edges": g.num_edges, "graph6": formats.to_graph6(g), "regular_degree": is_regular(g)}


def _write(path: str | None, g: Graph) -> None:
    if path:
        formats.write_graph(g, path)


# --- commands -------------------------------------------------------------------------


def cmd_core(args, budget: Budget):
    x = load_graph(args.graph)
    core = find_core(x, budget)
    r = core.retraction.map
    ok = (
        is_homomorphism_map(x, x, r)
        and all(r[t] == t for t in r)
        and sorted(set(r)) == core.vertices
        and is_core(core.graph, budget)
    )
    _write(args.output, core.graph)
    cert = {
        "core_order": core.graph.n,
        "core_graph6": formats.to_graph6(core.graph),
        "core_vertices": core.vertices,
        "retraction": list(r),
    }
    return describe(x), ("pass" if ok else "fail"), cert


def cmd_cayley(args, budget: Budget):
    group, conn = load_cayley(args)
    x = cayley_graph(group, conn)
    ok = is_regular(x) == len(conn) and all(
        is_automorphism(x, left_translation(group, a)) for a in group.elements()
    )
    cert = {
        "group_order": group.order,
        "connection_set": sorted(conn.elements),
        "graph6": formats.to_graph6(x),
    }
    if args.normal_check:
        cert["normal"] = is_normal_connection_set(group, conn)
    _write(args.output, x)
    return {"group_order": group.order, "connection_set_size": len(conn)}, ("pass" if ok else "fail"), cert


def cmd_partition(args, budget: Budget):
    if args.mode == "normal-cayley":
        group, conn = load_cayley(args)
        if not is_normal_connection_set(group, conn):
            raise InputError("connection set is not normal; use --mode exact-cover")
        res = core_partition_normal_cayley(group, conn, budget)
        x = res.graph
        blocks = res.partition.blocks
        ok = res.lemma.disjoint and _blocks_are_core_copies(x, blocks, res.core.graph)
        return describe(x), ("pass" if ok else "fail"), {"mode": args.mode, **res.to_dict()}
    if not args.graph:
        raise InputError("exact-cover mode needs a graph")
    x = load_graph(args.graph)
    core = find_core(x, budget)
    part = core_partition_search(x, budget, core_graph=core.graph)
    cert = {"mode": args.mode, "core_order": core.graph.n, "core_vertices": core.vertices}
    if part is None:
        cert["blocks"] = None
        return describe(x), "fail", cert
    cert["blocks"] = part.as_lists()
    ok = _blocks_are_core_copies(x, part.blocks, core.graph)
    return describe(x), ("pass" if ok else "fail"), cert


def _blocks_are_core_copies(x: Graph, blocks, core: Graph) -> bool:
    try:
        VertexPartition(x.n, tuple(blocks))
    except ValueError:
        return False
    return all(is_isomorphic(induced_subgraph(x, b), core) is not None for b in blocks)


def cmd_halfsize(args, budget: Budget):
    x = load_graph(args.graph)
    try:
        rep = half_size_structure(x, budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    q = equitable_check(x, VertexPartition.of(x.n, [rep.x1, rep.x2]))
    spectrum = quotient_spectrum_check(x, q) if q is not None else None
    cert = rep.to_dict()
    cert["spectrum"] = None if spectrum is None else spectrum.to_dict()
    ok = rep.certified and spectrum is not None and spectrum.certified
    return describe(x), ("pass" if ok else "fail"), cert


def cmd_counterexample(args, budget: Budget):
    try:
        rep = verify_line_graph_counterexample(args.n, exact_cover=args.exact_cover, budget=budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    cert = rep.to_dict()
    ok = rep.certified and is_homomorphism_map(rep.colouring.source, rep.colouring.target, rep.colouring.map)
    ok = ok and is_homomorphism_map(rep.clique.source, rep.clique.target, rep.clique.map)
    k = rep.core_order
    cert["summary"] = f"no partition into {rep.order // k} copies of K_{k}" if ok else "not certified"
    return {"graph": f"L(K_{2 * args.n})", "order": rep.order}, ("pass" if ok else "fail"), cert


def cmd_classify_arc(args, budget: Budget):
    x = load_graph(args.graph)
    res = arc_transitive_half_size_classify(x, budget)
    return describe(x), "pass", res.to_dict()


def cmd_sabidussi(args, budget: Budget):
    x = load_graph(args.graph)
    try:
        res = sabidussi_multiple(x, args.aut_cap, budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    ok = is_isomorphism_map(res.cayley, multiple(x, res.m), res.iso)
    _write(args.output, res.cayley)
    cert = res.to_dict()
    cert["cayley_graph6"] = formats.to_graph6(res.cayley)
    return describe(x), ("pass" if ok else "fail"), cert


def cmd_selfcore(args, budget: Budget):
    x = load_graph(args.graph)
    try:
        rep = self_core_by_spectral_test(x, budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    verdict = "pass" if rep.status == "certified_core" else "inconclusive"
    return describe(x), verdict, rep.to_dict()


COMMANDS = {
    "core": cmd_core,
    "cayley": cmd_cayley,
    "partition": cmd_partition,
    "halfsize": cmd_halfsize,
    "counterexample": cmd_counterexample,
    "classify-arc": cmd_classify_arc,
    "sabidussi": cmd_sabidussi,
    "selfcore": cmd_selfcore,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vtcores", description=__doc__.splitlines()[0])
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET, help="search node budget")
    p.add_argument("--aut-cap", type=int, default=DEFAULT_AUT_CAP, help="automorphism list cap")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_text):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("graph", help="graph file (graph6 or 'n <count>' edge list) or graph6 string")
        return s

    def cayley_opts(s):
        s.add_argument("--group", help="file with one cycle-notation generator per line")
        s.add_argument("--connection", help="connection set: indices, permutations, words, class:ITEM")
        s.add_argument("--close", action="store_true", help="add missing inverses to the connection set")

    s = graph_cmd("core", "compute the core and a retraction onto it")
    s.add_argument("--output", help="write the core in graph6 here")

    s = sub.add_parser("cayley", help="build a Cayley graph")
    s.add_argument("group_file", nargs="?", help="generator file (same as --group)")
    cayley_opts(s)
    s.add_argument("--normal-check", action="store_true")
    s.add_argument("--output", help="write the Cayley graph in graph6 here")

    s = sub.add_parser("partition", help="partition into induced copies of the core")
    s.add_argument("graph", nargs="?", help="graph for exact-cover mode")
    s.add_argument("--mode", choices=["normal-cayley", "exact-cover"], default="exact-cover")
    cayley_opts(s)

    graph_cmd("halfsize", "certify the half-size core structure")

    s = sub.add_parser("counterexample", help="L(K_2n) has no partition into core copies")
    s.add_argument("n", type=int)
    s.add_argument("--exact-cover", dest="exact_cover", action="store_true", default=None)
    s.add_argument("--no-exact-cover", dest="exact_cover", action="store_false")

    graph_cmd("classify-arc", "classify an arc-transitive graph with half-size core")
    s = graph_cmd("sabidussi", "exhibit a multiple of the graph as a Cayley graph")
    s.add_argument("--output", help="write the Cayley graph in graph6 here")
    graph_cmd("selfcore", "spectral self-core test on 2p vertices")
    return p


def run(argv: list[str] | None = None) -> tuple[dict, int]:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            raise
        return {"command": None, "verdict": "input_error", "error": "invalid arguments"}, EXIT["input_error"]
    if getattr(args, "group_file", None) and not args.group:
        args.group = args.group_file
    budget = Budget(args.node_budget)
    report = {"command": args.command, "instance": None, "certificate": None}
    try:
        instance, verdict, cert = COMMANDS[args.command](args, budget)
        report.update(instance=instance, verdict=verdict, certificate=cert)
    except (BudgetExceeded, AutomorphismOverflow) as exc:
        report.update(verdict="inconclusive", error=str(exc))
        verdict = "inconclusive"
    except (InputError, ValueError, OSError) as exc:
        report.update(verdict="input_error", error=str(exc))
        verdict = "input_error"
    except CertificateError as exc:
        report.update(verdict="fail", error=str(exc))
        verdict = "fail"
    report["budget_used"] = {"nodes": budget.used, "limit": budget.limit}
    return report, EXIT[verdict]


def main(argv: list[str] | None = None) -> int:
    report, code = run(argv)
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

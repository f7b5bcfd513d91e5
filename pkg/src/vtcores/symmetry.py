"""Automorphisms, vertex/arc transitivity and the collapsed-pair lemma check."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ._backtrack import Budget, ensure_budget, first, solve
from .graphs import Graph, _degree_signature, is_isomorphism_map, is_regular
from .homs import Homomorphism, Retraction

DEFAULT_AUT_CAP = 100_000


class AutomorphismOverflow(Exception):
    def __init__(self, cap: int):
        super().__init__(f"more than {cap} automorphisms")
        self.cap = cap


@dataclass(frozen=True)
class AutomorphismList:
    graph: Graph
    perms: tuple[tuple[int, ...], ...]
    complete: bool = True

    def __len__(self) -> int:
        return len(self.perms)

    def __iter__(self):
        return iter(self.perms)

    def orbit(self, v: int) -> frozenset[int]:
        return frozenset(p[v] for p in self.perms)


def _domains(x: Graph, fixed: dict[int, int] | None = None) -> list[int]:
    sig = _degree_signature(x)
    by_sig: dict = {}
    for t, s in enumerate(sig):
        by_sig[s] = by_sig.get(s, 0) | (1 << t)
    doms = [by_sig[s] for s in sig]
    for v, t in (fixed or {}).items():
        doms[v] &= 1 << t
    return doms


def automorphism_group(
    x: Graph, cap: int = DEFAULT_AUT_CAP, budget: Budget | int | None = None
) -> AutomorphismList:
    """Every automorphism of ``x``, in the deterministic search order."""
    perms = []
    for p in solve(x.masks, x.masks, _domains(x), injective=True, induced=True, budget=ensure_budget(budget)):
        perms.append(p)
        if len(perms) > cap:
            raise AutomorphismOverflow(cap)
    return AutomorphismList(x, tuple(perms))


def find_automorphism(
    x: Graph, fixed: dict[int, int], budget: Budget | int | None = None
) -> tuple[int, ...] | None:
    """An automorphism sending ``v -> fixed[v]`` for every key, if any."""
    return first(
        solve(x.masks, x.masks, _domains(x, fixed), injective=True, induced=True, budget=ensure_budget(budget))
    )


def is_automorphism(x: Graph, perm: Sequence[int]) -> bool:
    return is_isomorphism_map(x, x, perm)


def _orbit(start, gens: list[tuple[int, ...]], act) -> set:
    seen = {start}
    stack = [start]
    while stack:
        p = stack.pop()
        for g in gens:
            q = act(g, p)
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def is_vertex_transitive(x: Graph, budget: Budget | int | None = None) -> bool:
    """Orbit of vertex 0 under Aut(x) is everything.

    Builds the orbit from automorphisms ``0 -> v`` found on demand, closing
    under the ones already found, instead of listing the whole group.
    """
    if x.n <= 1:
        return True
    if is_regular(x) is None:
        return False
    budget = ensure_budget(budget)
    gens: list[tuple[int, ...]] = []
    orbit = {0}
    for v in range(x.n):
        if v in orbit:
            continue
        g = find_automorphism(x, {0: v}, budget)
        if g is None:
            return False
        gens.append(g)
        orbit = _orbit(0, gens, lambda p, u: p[u])
    return True


def arcs(x: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(x.n) for v in sorted(x.adj[u])]


def is_arc_transitive(x: Graph, budget: Budget | int | None = None) -> bool:
    all_arcs = arcs(x)
    if not all_arcs:
        raise ValueError("arc transitivity needs at least one edge")
    budget = ensure_budget(budget)
    base = all_arcs[0]
    gens: list[tuple[int, ...]] = []
    orbit = {base}
    for a in all_arcs:
        if a in orbit:
            continue
        g = find_automorphism(x, {base[0]: a[0], base[1]: a[1]}, budget)
        if g is None:
            return False
        gens.append(g)
        orbit = _orbit(base, gens, lambda p, arc: (p[arc[0]], p[arc[1]]))
    return True


@dataclass(frozen=True)
class OrbitalsReport:
    collapsed_pairs: int
    core_pairs: int
    automorphisms: int
    violations: tuple[tuple[tuple[int, int], tuple[int, int], tuple[int, ...]], ...]

    @property
    def clean(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "collapsed_pairs": self.collapsed_pairs,
            "core_pairs": self.core_pairs,
            "automorphisms_checked": self.automorphisms,
            "violations": [
                {"core_pair": list(w), "collapsed_pair": list(c), "automorphism": list(p)}
                for w, c, p in self.violations
            ],
        }


def collapsed_pairs(h: Homomorphism) -> set[frozenset[int]]:
    by_image: dict[int, list[int]] = {}
    for v, t in enumerate(h.map):
        by_image.setdefault(t, []).append(v)
    return {frozenset(p) for fib in by_image.values() for p in combinations(fib, 2)}


def check_lemma_orbitals(
    x: Graph,
    h: Homomorphism,
    core_retraction: Retraction,
    automorphisms: Iterable[Sequence[int]] | None = None,
    cap: int = DEFAULT_AUT_CAP,
) -> OrbitalsReport:
    """No automorphism maps a pair of core vertices onto a pair ``h`` collapses.

    ``h`` is an endomorphism of ``x`` onto a core and ``core_retraction`` a
    retraction onto a (possibly different) core. Every automorphism of ``x``
    is tried against every core pair; any hit is recorded as a violation.
    """
    if not h.is_endomorphism or h.source != x:
        raise ValueError("h must be an endomorphism of x")
    if core_retraction.graph != x:
        raise ValueError("retraction is not on x")
    if automorphisms is None:
        automorphisms = automorphism_group(x, cap).perms
    auts = [tuple(p) for p in automorphisms]
    bad = collapsed_pairs(h)
    core_pairs = list(combinations(sorted(core_retraction.image), 2))
    violations = []
    if bad:
        for p in auts:
            for w, z in core_pairs:
                img = frozenset((p[w], p[z]))
                if img in bad:
                    violations.append(((w, z), tuple(sorted(img)), p))
    return OrbitalsReport(len(bad), len(core_pairs), len(auts), tuple(violations))

"""Homomorphisms, retractions, fibres and cores."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from ._backtrack import Budget, BudgetExceeded, ensure_budget, first, solve
from .graphs import Graph, induced_subgraph, is_homomorphism_map


@dataclass(frozen=True)
class Homomorphism:
    source: Graph
    target: Graph
    map: tuple[int, ...]

    def __post_init__(self):
        if not is_homomorphism_map(self.source, self.target, self.map):
            raise ValueError("map does not preserve adjacency")

    def __call__(self, v: int) -> int:
        return self.map[v]

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    @property
    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def compose(self, inner: "Homomorphism") -> "Homomorphism":
        """``self o inner``."""
        if inner.target != self.source:
            raise ValueError("cannot compose: target/source mismatch")
        return Homomorphism(inner.source, self.target, tuple(self.map[t] for t in inner.map))


@dataclass(frozen=True)
class Retraction:
    """Endomorphism that is the identity on its image."""

    hom: Homomorphism
    image: frozenset[int] = field(init=False)

    def __post_init__(self):
        h = self.hom
        if not h.is_endomorphism:
            raise ValueError("a retraction must be an endomorphism")
        if any(h.map[t] != t for t in h.map):
            raise ValueError("map does not fix its image pointwise")
        object.__setattr__(self, "image", h.image)

    @property
    def graph(self) -> Graph:
        return self.hom.source

    @property
    def map(self) -> tuple[int, ...]:
        return self.hom.map


@dataclass(frozen=True)
class FibrePartition:
    by_image_vertex: dict[int, frozenset[int]]

    def sizes(self) -> dict[int, int]:
        return {y: len(f) for y, f in sorted(self.by_image_vertex.items())}

    def __getitem__(self, y: int) -> frozenset[int]:
        return self.by_image_vertex[y]


def fibres(h: Homomorphism) -> FibrePartition:
    out: dict[int, set[int]] = {}
    for v, t in enumerate(h.map):
        out.setdefault(t, set()).add(v)
    return FibrePartition({y: frozenset(out[y]) for y in sorted(out)})


# --- search -----------------------------------------------------------------


def iter_homomorphisms(
    x: Graph, y: Graph, budget: Budget | int | None = None, domains=None
) -> Iterator[Homomorphism]:
    budget = ensure_budget(budget)
    for m in solve(x.masks, y.masks, domains, budget=budget):
        yield Homomorphism(x, y, m)


def find_homomorphism(
    x: Graph, y: Graph, budget: Budget | int | None = None
) -> Homomorphism | None:
    """Some homomorphism ``x -> y`` or ``None`` after exhaustive search.

    Raises :class:`BudgetExceeded` when the node budget runs out first.
    """
    return first(iter_homomorphisms(x, y, budget))


def homomorphically_equivalent(x: Graph, y: Graph, budget: Budget | int | None = None) -> bool:
    budget = ensure_budget(budget)
    return find_homomorphism(x, y, budget) is not None and find_homomorphism(y, x, budget) is not None


def _into_subset(x: Graph, allowed: Iterable[int], fixed: Iterable[int] = ()) -> list[int]:
    allowed_mask = sum(1 << v for v in set(allowed))
    doms = [allowed_mask] * x.n
    for v in fixed:
        doms[v] = 1 << v
    return doms


def find_retraction_to(
    x: Graph, image: Iterable[int], budget: Budget | int | None = None
) -> Retraction | None:
    """Retraction of ``x`` fixing ``image`` pointwise, or ``None``."""
    image = sorted(set(image))
    if not image:
        raise ValueError("retraction image must be nonempty")
    doms = _into_subset(x, image, fixed=image)
    m = first(solve(x.masks, x.masks, doms, budget=ensure_budget(budget)))
    return None if m is None else Retraction(Homomorphism(x, x, m))


def endomorphism_avoiding(
    x: Graph, vertices: Iterable[int], v: int, budget: Budget | int | None = None
) -> Homomorphism | None:
    """Endomorphism of ``x`` with image inside ``vertices - {v}``."""
    allowed = set(vertices) - {v}
    doms = [0] * x.n if not allowed else _into_subset(x, allowed)
    m = first(solve(x.masks, x.masks, doms, budget=ensure_budget(budget)))
    return None if m is None else Homomorphism(x, x, m)


def retraction_from_endomorphism(h: Homomorphism, core_vertices: Iterable[int]) -> Retraction:
    """Turn an endomorphism onto a core into a retraction onto the same set.

    ``h`` restricted to a core is an automorphism of that core; composing
    with its inverse fixes the core pointwise.
    """
    core = sorted(set(core_vertices))
    if set(h.map) != set(core):
        raise ValueError("image of h is not the given vertex set")
    back = {h.map[c]: c for c in core}
    if len(back) != len(core):
        raise ValueError("h is not bijective on the given set, so it is not a core")
    return Retraction(Homomorphism(h.source, h.target, tuple(back[t] for t in h.map)))


class Core(NamedTuple):
    graph: Graph
    retraction: Retraction

    @property
    def vertices(self) -> list[int]:
        return sorted(self.retraction.image)


def find_core(x: Graph, budget: Budget | int | None = None) -> Core:
    """Core of ``x`` as an induced subgraph, with a retraction onto it.

    Descent: keep a homomorphism of ``x`` onto a vertex set ``S``. For each
    ``v`` in ``S``, highest index first, look for a homomorphism
    ``x[S] -> x[S - {v}]``; on the first success shrink ``S`` to the image of the composite. When no ``v``
    qualifies, ``x[S]`` is a core. On budget exhaustion the raised
    :class:`BudgetExceeded` carries the best retraction found so far in
    ``partial``.
    """
    budget = ensure_budget(budget)
    current = tuple(range(x.n))
    support = list(range(x.n))
    while True:
        sub = induced_subgraph(x, support)
        full = sum(1 << s for s in support)
        step = None
        try:
            for v in reversed(support):
                doms = [full & ~(1 << v)] * sub.n
                step = first(solve(sub.masks, x.masks, doms, budget=budget))
                if step is not None:
                    break
        except BudgetExceeded as exc:
            exc.partial = retraction_from_endomorphism(Homomorphism(x, x, current), support)
            raise
        if step is None:
            break
        pos = {s: i for i, s in enumerate(support)}
        current = tuple(step[pos[t]] for t in current)
        support = sorted(set(current))
    retraction = retraction_from_endomorphism(Homomorphism(x, x, current), support)
    return Core(induced_subgraph(x, support), retraction)


def is_core(x: Graph, budget: Budget | int | None = None) -> bool:
    """True iff every endomorphism of ``x`` is onto (no proper retract)."""
    budget = ensure_budget(budget)
    allv = range(x.n)
    return all(endomorphism_avoiding(x, allv, v, budget) is None for v in allv)


@dataclass(frozen=True)
class FibreReport:
    sizes: dict[int, int]
    equal: bool
    expected: Fraction

    def to_dict(self) -> dict:
        return {
            "fibre_sizes": {str(k): v for k, v in self.sizes.items()},
            "equal": self.equal,
            "expected_size": str(self.expected),
        }


def verify_equal_fibres(x: Graph, h: Homomorphism, budget: Budget | int | None = None) -> FibreReport:
    """Fibre sizes of an endomorphism of ``x`` whose image is a core.

    For vertex-transitive ``x`` every fibre has size ``|V(x)| / |image|``;
    this routine only reports, it does not require transitivity.
    """
    if h.source != x or h.target != x:
        raise ValueError("h must be an endomorphism of x")
    image = sorted(h.image)
    if not is_core(induced_subgraph(x, image), budget):
        raise ValueError("image of h is not a core")
    sizes = fibres(h).sizes()
    return FibreReport(sizes, len(set(sizes.values())) == 1, Fraction(x.n, len(image)))

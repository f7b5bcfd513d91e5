"""Forward-checking backtracking over vertex maps.

Every search in the package (homomorphisms, retractions, isomorphisms,
automorphisms, induced copies) runs through :func:`solve`. Graphs are passed
as lists of neighbour bitmasks so this module has no dependency on
:class:`vtcores.graphs.Graph`.
"""

from __future__ import annotations

from typing import Iterator, Sequence

DEFAULT_NODE_BUDGET = 10**7


class BudgetExceeded(Exception):
    """Raised when a search spends more nodes than its budget allows.

    This is the "inconclusive" outcome: the search neither found an answer
    nor proved that none exists.
    """

    def __init__(self, used: int, limit: int, partial=None):
        super().__init__(f"search budget exceeded ({used} > {limit} nodes)")
        self.used = used
        self.limit = limit
        self.partial = partial


class Budget:
    """Node counter shared by all searches of one logical computation."""

    def __init__(self, limit: int = DEFAULT_NODE_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, nodes: int = 1) -> None:
        self.used += nodes
        if self.used > self.limit:
            raise BudgetExceeded(self.used, self.limit)

    def __repr__(self) -> str:
        return f"Budget(used={self.used}, limit={self.limit})"


def ensure_budget(budget: Budget | int | None) -> Budget:
    if budget is None:
        return Budget()
    if isinstance(budget, int):
        return Budget(budget)
    return budget


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def solve(
    source_masks: Sequence[int],
    target_masks: Sequence[int],
    domains: Sequence[int] | None = None,
    *,
    injective: bool = False,
    induced: bool = False,
    budget: Budget | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every map ``source -> target`` satisfying the constraints.

    Edges of the source always map to edges of the target. With
    ``injective`` the map is one-to-one, and with ``induced`` non-edges must
    map to non-edges as well (an isomorphism onto the image when combined
    with ``injective``). ``domains[u]`` is a bitmask of allowed images.

    Each tentative assignment costs one budget node. The next variable is the
    unassigned source vertex with the fewest remaining candidates, ties
    broken by descending degree and then by index; candidates are tried in
    ascending order. Enumeration order is therefore fully deterministic.
    Injective searches also prune when more free vertices share an identical
    domain than that domain has members.
    """
    if budget is None:
        budget = Budget()
    n = len(source_masks)
    full = (1 << len(target_masks)) - 1
    doms = [full] * n if domains is None else [d & full for d in domains]
    if n == 0:
        yield ()
        return
    if not all(doms):
        return
    rank = [0] * n
    for r, v in enumerate(sorted(range(n), key=lambda v: (-popcount(source_masks[v]), v))):
        rank[v] = r
    assign = [-1] * n

    def rec(doms: list[int], free: list[int]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(assign)
            return
        u = min(free, key=lambda v: (popcount(doms[v]), rank[v]))
        rest = [v for v in free if v != u]
        nbrs = source_masks[u]
        cand = doms[u]
        while cand:
            low = cand & -cand
            cand ^= low
            t = low.bit_length() - 1
            budget.spend()
            tn = target_masks[t]
            new = doms[:]
            for w in rest:
                d = new[w]
                if nbrs >> w & 1:
                    d &= tn
                elif induced:
                    d &= ~tn
                if injective:
                    d &= ~low
                if not d:
                    break
                new[w] = d
            else:
                if injective and _pigeonhole(new, rest):
                    continue
                assign[u] = t
                yield from rec(new, rest)
        assign[u] = -1

    yield from rec(doms, list(range(n)))


def _pigeonhole(doms: list[int], free: list[int]) -> bool:
    """True if more free vertices share one domain than it has targets."""
    count: dict[int, int] = {}
    for w in free:
        d = doms[w]
        c = count.get(d, 0) + 1
        if c > popcount(d):
            return True
        count[d] = c
    return False


def first(it: Iterator):
    return next(it, None)

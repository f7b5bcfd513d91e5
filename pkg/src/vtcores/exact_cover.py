"""Exact cover by Knuth's Algorithm X on dictionaries of sets."""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator, Sequence

from ._backtrack import Budget, ensure_budget


def exact_covers(
    universe: Iterable[Hashable],
    subsets: Sequence[Iterable[Hashable]],
    budget: Budget | int | None = None,
) -> Iterator[list[int]]:
    """Yield index lists of ``subsets`` that partition ``universe``.

    Columns are chosen by fewest candidate rows, ties by sort order of the
    element; rows are tried in ascending index. Each row tried costs one
    budget node.
    """
    budget = ensure_budget(budget)
    rows = {i: frozenset(s) for i, s in enumerate(subsets)}
    cols: dict = {e: set() for e in universe}
    for i, s in rows.items():
        if not s <= cols.keys():
            continue
        for e in s:
            cols[e].add(i)
    order = {e: k for k, e in enumerate(sorted(cols, key=repr))}
    chosen: list[int] = []

    def select(i: int) -> list[set[int]]:
        removed = []
        for e in rows[i]:
            for j in cols[e]:
                for f in rows[j]:
                    if f != e:
                        cols[f].discard(j)
            removed.append(cols.pop(e))
        return removed

    def deselect(i: int, removed: list[set[int]]) -> None:
        for e in reversed(list(rows[i])):
            cols[e] = removed.pop()
            for j in cols[e]:
                for f in rows[j]:
                    if f != e:
                        cols[f].add(j)

    def search() -> Iterator[list[int]]:
        if not cols:
            yield list(chosen)
            return
        e = min(cols, key=lambda c: (len(cols[c]), order[c]))
        for i in sorted(cols[e]):
            budget.spend()
            chosen.append(i)
            removed = select(i)
            yield from search()
            deselect(i, removed)
            chosen.pop()

    yield from search()


def find_exact_cover(universe, subsets, budget: Budget | int | None = None) -> list[int] | None:
    return next(exact_covers(universe, subsets, budget), None)

"""Exact integer rank via fraction-free (Bareiss) elimination."""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph


def integer_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix, computed without leaving the integers.

    Each elimination step replaces ``a[i][j]`` by
    ``(p * a[i][j] - a[i][k] * a[r][j]) // prev`` where ``p`` is the current
    pivot and ``prev`` the previous one; the division is always exact.
    """
    a = [list(map(int, row)) for row in matrix]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank, prev = 0, 1
    for k in range(cols):
        if rank == rows:
            break
        piv = next((i for i in range(rank, rows) if a[i][k]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][k]
        for i in range(rank + 1, rows):
            f = a[i][k]
            row_i, row_r = a[i], a[rank]
            for j in range(k + 1, cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[k] = 0
        prev = p
        rank += 1
    return rank


def adjacency_matrix(g: Graph) -> list[list[int]]:
    return [[1 if v in g.adj[u] else 0 for v in range(g.n)] for u in range(g.n)]


def eigenvalue_multiplicity(g: Graph, lam: int) -> int:
    """Nullity of ``A - lam I``; positive iff ``lam`` is an eigenvalue."""
    a = adjacency_matrix(g)
    for i in range(g.n):
        a[i][i] -= lam
    return g.n - integer_rank(a)


def is_eigenvalue(g: Graph, lam: int) -> bool:
    return eigenvalue_multiplicity(g, lam) > 0

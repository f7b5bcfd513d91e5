"""Finite groups as multiplication tables, Cayley graphs and translations.

Permutation groups compose right-to-left: the product ``a * b`` is the
permutation ``x -> a[b[x]]``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations as _all_perms
from typing import Iterable, Sequence

from .graphs import Graph

DEFAULT_GROUP_CAP = 10_080
FULL_ASSOCIATIVITY_LIMIT = 64


class GroupTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    """Group on elements ``0..order-1`` given by its multiplication table.

    ``labels`` optionally records what each element is (for permutation
    groups, the permutation tuple).
    """

    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.mul)
        if n == 0:
            raise ValueError("a group has at least one element")
        if any(len(row) != n or any(not 0 <= c < n for c in row) for row in self.mul):
            raise ValueError("multiplication table must be order x order with valid entries")
        e = self.identity
        if any(self.mul[e][g] != g or self.mul[g][e] != g for g in range(n)):
            raise ValueError(f"element {e} is not a two-sided identity")
        if len(self.inv) != n or any(self.mul[self.inv[g]][g] != e for g in range(n)):
            raise ValueError("inverse table is wrong")
        if n <= FULL_ASSOCIATIVITY_LIMIT:
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        else:
            rng = random.Random(n)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(10 * n))
        m = self.mul
        for a, b, c in triples:
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise ValueError(f"table not associative at ({a}, {b}, {c})")

    @property
    def order(self) -> int:
        return len(self.mul)

    def elements(self) -> range:
        return range(self.order)

    def product(self, *gs: int) -> int:
        out = self.identity
        for g in gs:
            out = self.mul[out][g]
        return out

    def conjugate(self, c: int, g: int) -> int:
        """``g^-1 c g``."""
        return self.mul[self.mul[self.inv[g]][c]][g]

    def is_abelian(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in range(self.order) for b in range(a))

    def conjugacy_class(self, c: int) -> frozenset[int]:
        return frozenset(self.conjugate(c, g) for g in self.elements())

    def index_of(self, label) -> int:
        if self.labels is None:
            raise ValueError("group has no element labels")
        try:
            return self.labels.index(tuple(label))
        except ValueError:
            raise ValueError(f"{label!r} is not an element of this group") from None

    @classmethod
    def from_permutations(cls, perms: Sequence[Sequence[int]]) -> "FiniteGroup":
        """Table of an already closed list of permutations (identity anywhere)."""
        elems = [tuple(p) for p in perms]
        index = {p: i for i, p in enumerate(elems)}
        if len(index) != len(elems):
            raise ValueError("duplicate permutations")
        try:
            mul = tuple(tuple(index[tuple(a[x] for x in b)] for b in elems) for a in elems)
        except KeyError:
            raise ValueError("permutation list is not closed under composition") from None
        ident = index.get(tuple(range(len(elems[0]))))
        if ident is None:
            raise ValueError("identity permutation missing")
        inv = tuple(mul[i].index(ident) for i in range(len(elems)))
        return cls(mul, ident, inv, tuple(elems))


def group_from_permutations(
    generators: Iterable[Sequence[int]], cap: int = DEFAULT_GROUP_CAP
) -> FiniteGroup:
    """Breadth-first closure of ``generators``; identity is element 0."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    deg = len(gens[0])
    if any(len(g) != deg or sorted(g) != list(range(deg)) for g in gens):
        raise ValueError("generators must be permutations of a common range(n)")
    ident = tuple(range(deg))
    elems = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(p[x] for x in g)
            if q not in index:
                if len(elems) >= cap:
                    raise GroupTooLarge(f"closure exceeds cap of {cap} elements")
                index[q] = len(elems)
                elems.append(q)
                queue.append(q)
    return FiniteGroup.from_permutations(elems)


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("order must be positive")
    mul = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(mul, 0, tuple((-a) % n for a in range(n)))


def dihedral_group(n: int) -> FiniteGroup:
    """Order ``2n``; element ``k + n*e`` is ``r^k s^e`` with ``s r s = r^-1``."""
    if n < 1:
        raise ValueError("n must be positive")

    def mult(x: int, y: int) -> int:
        a, e = x % n, x // n
        b, f = y % n, y // n
        k = (a + (b if e == 0 else -b)) % n
        return k + n * ((e + f) % 2)

    size = 2 * n
    mul = tuple(tuple(mult(x, y) for y in range(size)) for x in range(size))
    inv = tuple(mul[x].index(0) for x in range(size))
    return FiniteGroup(mul, 0, inv)


def symmetric_group(n: int) -> FiniteGroup:
    """All permutations of ``range(n)`` in lexicographic order (identity first)."""
    if not 1 <= n <= 5:
        raise ValueError("symmetric_group supports 1 <= n <= 5")
    return FiniteGroup.from_permutations(list(_all_perms(range(n))))


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Element ``(a, b)`` is stored as ``a * |h| + b``."""
    m = h.order
    size = g.order * m
    mul = tuple(
        tuple(g.mul[x // m][y // m] * m + h.mul[x % m][y % m] for y in range(size))
        for x in range(size)
    )
    inv = tuple(g.inv[x // m] * m + h.inv[x % m] for x in range(size))
    return FiniteGroup(mul, g.identity * m + h.identity, inv)


# --- connection sets and Cayley graphs ---------------------------------------


@dataclass(frozen=True)
class ConnectionSet:
    elements: frozenset[int]

    @classmethod
    def of(cls, group: FiniteGroup, elements: Iterable[int]) -> "ConnectionSet":
        c = cls(frozenset(elements))
        c.validate(group)
        return c

    @classmethod
    def closure(cls, group: FiniteGroup, elements: Iterable[int]) -> "ConnectionSet":
        """Smallest inverse-closed set containing ``elements``."""
        els = set(elements)
        return cls.of(group, els | {group.inv[c] for c in els})

    def validate(self, group: FiniteGroup) -> None:
        for c in self.elements:
            if not 0 <= c < group.order:
                raise ValueError(f"element {c} not in group of order {group.order}")
        if group.identity in self.elements:
            raise ValueError("connection set contains the identity")
        missing = sorted(c for c in self.elements if group.inv[c] not in self.elements)
        if missing:
            raise ValueError(f"connection set not inverse-closed: inverses of {missing} missing")

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)


def cayley_graph(group: FiniteGroup, conn: ConnectionSet | Iterable[int]) -> Graph:
    """X(G, C): ``g ~ h`` iff ``g^-1 h`` lies in ``C``."""
    if not isinstance(conn, ConnectionSet):
        conn = ConnectionSet(frozenset(conn))
    conn.validate(group)
    c = conn.elements
    adj = tuple(
        frozenset(h for h in group.elements() if group.mul[group.inv[g]][h] in c)
        for g in group.elements()
    )
    return Graph(group.order, adj)


def is_normal_connection_set(group: FiniteGroup, conn: ConnectionSet | Iterable[int]) -> bool:
    c = conn.elements if isinstance(conn, ConnectionSet) else frozenset(conn)
    return all(
        frozenset(group.conjugate(x, g) for x in c) == c for g in group.elements()
    )


def left_translation(group: FiniteGroup, a: int) -> tuple[int, ...]:
    """``x -> a x``; an automorphism of every Cayley graph on ``group``."""
    return group.mul[a]


def right_translation(group: FiniteGroup, a: int) -> tuple[int, ...]:
    """``x -> x a``; an automorphism of X(G, C) exactly when C is normal."""
    return tuple(group.mul[x][a] for x in group.elements())


def right_coset_translate(group: FiniteGroup, vertices: Iterable[int], a: int) -> frozenset[int]:
    """The set ``V a^-1 = {v a^-1 : v in V}``."""
    ainv = group.inv[a]
    return frozenset(group.mul[v][ainv] for v in vertices)

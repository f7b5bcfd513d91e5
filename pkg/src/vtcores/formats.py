"""Text formats: graph6, ``n <count>`` edge lists, and cycle-notation generators."""

from __future__ import annotations

import re
from pathlib import Path

from .graphs import Graph

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph, header: bool = False) -> str:
    """graph6 string (no trailing newline) for ``g``.

    The upper triangle is read column by column, ``x(0,1) x(0,2) x(1,2) ...``,
    padded with zeros to a multiple of six bits.
    """
    out = bytearray(_encode_n(g.n))
    bitlist = [1 if i in g.adj[j] else 0 for j in range(1, g.n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    for k in range(0, len(bitlist), 6):
        chunk = 0
        for b in bitlist[k:k + 6]:
            chunk = (chunk << 1) | b
        out.append(chunk + 63)
    text = out.decode("ascii")
    return _HEADER + text if header else text


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    data = s.encode("ascii")
    if not data or any(not 63 <= c <= 126 for c in data):
        raise ValueError("not a graph6 string")
    vals = [c - 63 for c in data]
    if vals[0] < 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] < 63:
        if len(vals) < 4:
            raise ValueError("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    else:
        if len(vals) < 8:
            raise ValueError("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        rest = vals[8:]
    need = n * (n - 1) // 2
    if len(rest) != -(-need // 6):
        raise ValueError(f"graph6 body has {len(rest)} bytes, expected {-(-need // 6)}")
    flat = [(v >> (5 - k)) & 1 for v in rest for k in range(6)]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if flat[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[str]:
    return [ln for ln in (raw.split("#", 1)[0].strip() for raw in text.splitlines()) if ln]


def from_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise ValueError(f"edge list must start with 'n <count>', got {lines[0]!r}")
    n = int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def parse_graph(text: str) -> Graph:
    """Read either an edge list (``n <count>`` header) or a graph6 string."""
    lines = _content_lines(text)
    if lines and lines[0].split()[0] == "n":
        return from_edge_list(text)
    if len(lines) != 1:
        raise ValueError("expected a single graph6 line or an edge list")
    return from_graph6(lines[0])


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(to_graph6(g) + "\n")


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Permutation from cycle notation such as ``"(0 1)(2 3 4)"``.

    Points are nonnegative integers separated by spaces or commas. The result
    acts on ``range(degree)``; when ``degree`` is omitted it is one more than
    the largest point mentioned. ``"()"`` is the identity.
    """
    s = text.strip()
    if not s or _CYCLE.sub("", s).strip():
        raise ValueError(f"not cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE.findall(s):
        pts = [int(p) for p in re.split(r"[\s,]+", body.strip()) if p]
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle ({body})")
        cycles.append(pts)
    top = max((p for c in cycles for p in c), default=-1) + 1
    size = top if degree is None else degree
    if size < top:
        raise ValueError(f"point {top - 1} outside degree {degree}")
    perm = list(range(size))
    used: set[int] = set()
    for c in cycles:
        if used & set(c):
            raise ValueError("cycles are not disjoint")
        used |= set(c)
        for a, b in zip(c, c[1:] + c[:1]):
            perm[a] = b
    return tuple(perm)


def format_cycles(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for s in range(len(perm)):
        if seen[s] or perm[s] == s:
            seen[s] = True
            continue
        cyc, v = [], s
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = perm[v]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def parse_generators(text: str) -> list[tuple[int, ...]]:
    """One cycle-notation generator per nonblank line, all on a common degree."""
    lines = _content_lines(text)
    if not lines:
        raise ValueError("no generators given")
    raw = [parse_cycles(ln) for ln in lines]
    degree = max(len(p) for p in raw)
    return [tuple(list(p) + list(range(len(p), degree))) for p in raw]


def read_generators(path: str | Path) -> list[tuple[int, ...]]:
    return parse_generators(Path(path).read_text())

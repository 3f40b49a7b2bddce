"""Undirected simple graphs, degree partitions and the edge-list file format."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdgeError,
    EdgeListParseError,
    EmptyGraphError,
    OutOfRangeVertexError,
    SelfLoopError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class MolecularGraph:
    """Immutable simple graph on vertices ``0..vertex_count-1``.

    Build instances with :func:`build_graph`; the constructor does not
    validate. ``edges`` holds each edge once as ``(u, v)`` with ``u < v``,
    in sorted order.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)
    degrees: tuple[int, ...] = field(repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return degree(self, v)


def build_graph(vertex_count: int, edge_list: Iterable[Sequence[int]]) -> MolecularGraph:
    if vertex_count < 0:
        raise ValueError(f"vertex_count must be nonnegative, got {vertex_count}")
    seen: set[Edge] = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise OutOfRangeVertexError((u, v), vertex_count)
        if u == v:
            raise SelfLoopError((u, v))
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError((u, v))
        seen.add(key)

    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)
    return MolecularGraph(
        vertex_count=vertex_count,
        edges=edges,
        adjacency=adjacency,
        degrees=tuple(len(n) for n in adjacency),
    )


def degree(g: MolecularGraph, v: int) -> int:
    if not 0 <= v < g.vertex_count:
        raise OutOfRangeVertexError((v,), g.vertex_count)
    return g.degrees[v]


@dataclass(frozen=True)
class DegreePartition:
    """Vertex counts keyed by degree; only occurring degrees are present."""

    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class EdgePartition:
    """Edge counts keyed by the endpoint degree pair ``(d1, d2)``, ``d1 <= d2``."""

    counts: dict[tuple[int, int], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def degree_partition(g: MolecularGraph) -> DegreePartition:
    return DegreePartition(dict(sorted(Counter(g.degrees).items())))


def edge_partition(g: MolecularGraph) -> EdgePartition:
    deg = g.degrees
    c: Counter[tuple[int, int]] = Counter()
    for u, v in g.edges:
        a, b = deg[u], deg[v]
        c[(a, b) if a <= b else (b, a)] += 1
    return EdgePartition(dict(sorted(c.items())))


def is_connected(g: MolecularGraph) -> bool:
    if g.vertex_count == 0:
        raise EmptyGraphError("connectivity is undefined for the empty graph")
    seen = bytearray(g.vertex_count)
    seen[0] = 1
    queue = deque([0])
    reached = 1
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = 1
                reached += 1
                queue.append(w)
    return reached == g.vertex_count


def relabel(g: MolecularGraph, perm: Sequence[int]) -> MolecularGraph:
    """Return the isomorphic copy with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.vertex_count)):
        raise ValueError("perm must be a permutation of range(vertex_count)")
    return build_graph(g.vertex_count, ((perm[u], perm[v]) for u, v in g.edges))


# Edge-list files: "# vertices N" header, then one "u v" line per edge.

def format_edge_list(g: MolecularGraph) -> str:
    lines = [f"# vertices {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: MolecularGraph, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))


def parse_edge_list(text: str) -> MolecularGraph:
    lines = text.splitlines()
    if not lines:
        raise EdgeListParseError(1, "empty file; expected '# vertices <N>' header")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "#" or head[1] != "vertices":
        raise EdgeListParseError(1, f"expected '# vertices <N>' header, got {lines[0]!r}")
    try:
        n = int(head[2])
    except ValueError:
        raise EdgeListParseError(1, f"bad vertex count {head[2]!r}") from None
    if n < 0:
        raise EdgeListParseError(1, f"negative vertex count {n}")

    pairs: list[Edge] = []
    line_of: dict[Edge, int] = {}
    for line_no, line in enumerate(lines[1:], start=2):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise EdgeListParseError(line_no, f"expected 'u v', got {s!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer vertex id in {s!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(line_no, f"vertex out of range in {s!r} (N={n})")
        if u == v:
            raise EdgeListParseError(line_no, f"self-loop {s!r}")
        key = (min(u, v), max(u, v))
        if key in line_of:
            raise EdgeListParseError(line_no, f"duplicate edge {s!r} (first on line {line_of[key]})")
        line_of[key] = line_no
        pairs.append((u, v))
    return build_graph(n, pairs)


def read_edge_list(path: str | Path) -> MolecularGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())

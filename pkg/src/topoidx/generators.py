"""Deterministic builders for PAH_n and the jagged-rectangle benzenoid B_{m,n}.

Both families live on the hexagonal lattice. Hexagons are pointy-top; a
hexagon centre is ``(x, y)`` in integer units of half a hexagon width
horizontally and half a circumradius vertically, so every corner has exact
integer coordinates and shared corners deduplicate by equality.
"""

from __future__ import annotations

from typing import Iterable

from .families import Benzenoid, Family, Pah
from .graph import MolecularGraph, build_graph

Point = tuple[int, int]

# corners of a pointy-top hexagon, counter-clockwise from the top
_CORNERS = ((0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1), (1, 1))


def pah_hexagons(n: int) -> list[Point]:
    """Centres of the 3n^2-3n+1 hexagons within n-1 rings of the origin."""
    Pah(n)
    r = n - 1
    centres = []
    for q in range(-r, r + 1):
        for s in range(max(-r, -q - r), min(r, -q + r) + 1):
            centres.append((2 * q + s, 3 * s))
    return sorted(centres, key=lambda c: (c[1], c[0]))


def benzenoid_hexagons(m: int, n: int) -> list[Point]:
    """Centres for B_{m,n}: rows 0, 2, ..., 2n hold m-1 hexagons, odd rows hold m."""
    Benzenoid(m, n)
    centres = []
    for row in range(2 * n + 1):
        if row % 2 == 0:
            centres.extend((2 * j + 1, 3 * row) for j in range(m - 1))
        else:
            centres.extend((2 * j, 3 * row) for j in range(m))
    return centres


def hexagonal_system(centres: Iterable[Point]) -> MolecularGraph:
    """Carbon skeleton of the union of the given hexagons.

    Vertex ids follow the corners sorted by ``(y, x)``.
    """
    segments: set[tuple[Point, Point]] = set()
    for cx, cy in centres:
        ring = [(cx + dx, cy + dy) for dx, dy in _CORNERS]
        for i in range(6):
            a, b = ring[i], ring[(i + 1) % 6]
            segments.add((a, b) if a < b else (b, a))
    points = sorted({p for seg in segments for p in seg}, key=lambda p: (p[1], p[0]))
    ids = {p: i for i, p in enumerate(points)}
    return build_graph(len(points), ((ids[a], ids[b]) for a, b in segments))


def attach_leaves(g: MolecularGraph, degree: int = 2) -> MolecularGraph:
    """Hang one new pendant vertex on every vertex of the given degree.

    New ids are appended in order of the vertex they hang from.
    """
    edges = list(g.edges)
    nxt = g.vertex_count
    for v, d in enumerate(g.degrees):
        if d == degree:
            edges.append((v, nxt))
            nxt += 1
    return build_graph(nxt, edges)


def remove_leaves(g: MolecularGraph) -> MolecularGraph:
    """Delete every degree-1 vertex, renumbering the rest in order."""
    keep = [v for v, d in enumerate(g.degrees) if d != 1]
    new_id = {v: i for i, v in enumerate(keep)}
    return build_graph(
        len(keep),
        ((new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id),
    )


def generate_pah(n: int) -> MolecularGraph:
    """PAH_n with 6n^2 carbons (ids first) followed by 6n hydrogens."""
    return attach_leaves(hexagonal_system(pah_hexagons(n)))


def generate_benzenoid(m: int, n: int) -> MolecularGraph:
    return hexagonal_system(benzenoid_hexagons(m, n))


def pah_hydrogen_count(n: int) -> int:
    Pah(n)
    return 6 * n


def generate(family: Family) -> MolecularGraph:
    if isinstance(family, Pah):
        return generate_pah(family.n)
    if isinstance(family, Benzenoid):
        return generate_benzenoid(family.m, family.n)
    raise TypeError(f"unknown family {family!r}")

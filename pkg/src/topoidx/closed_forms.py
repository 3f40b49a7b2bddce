"""Closed-form index values for PAH_n and B_{m,n}, evaluated without any graph.

Each formula is kept as a list of ``(base, exponent)`` terms exactly as it is
usually written (bases 4, 5, 6, 9 and so on) and only canonicalised into
primes when evaluated.
"""

from __future__ import annotations

from .factored import FactoredNumber
from .families import Benzenoid, Family, Pah
from .graph import DegreePartition, EdgePartition
from .indices import IndexKind, IndexSpec, NamedIndex

Terms = list[tuple[int, int]]


def pah_counts(n: int) -> tuple[int, int, int]:
    """``(vertices, edges, leaves)`` of PAH_n."""
    Pah(n)
    return 6 * n * n + 6 * n, 9 * n * n + 3 * n, 6 * n


def pah_partitions(n: int) -> tuple[DegreePartition, EdgePartition]:
    Pah(n)
    return (
        DegreePartition({1: 6 * n, 3: 6 * n * n}),
        EdgePartition({(1, 3): 6 * n, (3, 3): 9 * n * n - 3 * n}),
    )


def pah_hexagon_count(n: int) -> int:
    Pah(n)
    return 3 * n * n - 3 * n + 1


def benzenoid_counts(m: int, n: int) -> tuple[int, int]:
    """``(vertices, edges)`` of B_{m,n}."""
    Benzenoid(m, n)
    return 4 * m * n + 4 * m + 2 * n - 2, 6 * m * n + 5 * m + n - 4


def benzenoid_partitions(m: int, n: int) -> tuple[DegreePartition, EdgePartition]:
    Benzenoid(m, n)
    return (
        DegreePartition({2: 2 * m + 4 * n + 2, 3: 4 * m * n + 2 * m - 2 * n - 4}),
        EdgePartition({
            (2, 2): 2 * n + 4,
            (2, 3): 4 * m + 4 * n - 4,
            (3, 3): 6 * m * n + m - 5 * n - 4,
        }),
    )


def benzenoid_hexagon_count(m: int, n: int) -> int:
    Benzenoid(m, n)
    return (n + 1) * (m - 1) + n * m


def pah_terms(spec: IndexSpec, n: int) -> Terms:
    Pah(n)
    a = spec.exact_parameter()
    if spec.kind is IndexKind.EDGE_SUM_POWER:
        return [(4, 6 * a * n), (6, (9 * n * n - 3 * n) * a)]
    if spec.kind is IndexKind.EDGE_PRODUCT_POWER:
        return [(3, 18 * a * n * n)]
    return [(3, 6 * a * n * n)]


def benzenoid_terms(spec: IndexSpec, m: int, n: int) -> Terms:
    Benzenoid(m, n)
    a = spec.exact_parameter()
    e22, e23, e33 = 2 * n + 4, 4 * m + 4 * n - 4, 6 * m * n + m - 5 * n - 4
    if spec.kind is IndexKind.EDGE_SUM_POWER:
        return [(4, a * e22), (5, a * e23), (6, a * e33)]
    if spec.kind is IndexKind.EDGE_PRODUCT_POWER:
        return [(4, a * e22), (6, a * e23), (9, a * e33)]
    return [(2, (2 * m + 4 * n + 2) * a), (3, (4 * m * n + 2 * m - 2 * n - 4) * a)]


def closed_form_terms(spec: IndexSpec, family: Family) -> Terms:
    if isinstance(family, Pah):
        return pah_terms(spec, family.n)
    if isinstance(family, Benzenoid):
        return benzenoid_terms(spec, family.m, family.n)
    raise TypeError(f"unknown family {family!r}")


def named_terms(idx: NamedIndex, family: Family) -> Terms:
    """Terms of a named index in its customary presentation.

    Only the first Zagreb index of B_{m,n} differs from the general formula:
    it is written with bases 4 and 9 rather than 2**2 and 3**2.
    """
    if isinstance(family, Benzenoid) and idx is NamedIndex.FIRST_MULTIPLICATIVE_ZAGREB:
        m, n = family.m, family.n
        return [(4, 2 * m + 4 * n + 2), (9, 4 * m * n + 2 * m - 2 * n - 4)]
    return closed_form_terms(idx.spec, family)


def evaluate_terms(terms: Terms) -> FactoredNumber:
    return FactoredNumber.from_powers(terms)


def render_terms(terms: Terms, times: str = " × ") -> str:
    shown = [f"{b}^{e}" if e != 1 else str(b) for b, e in terms if e != 0]
    return times.join(shown) if shown else "1"


def pah_closed_form(spec: IndexSpec, n: int) -> FactoredNumber:
    return evaluate_terms(pah_terms(spec, n))


def benzenoid_closed_form(spec: IndexSpec, m: int, n: int) -> FactoredNumber:
    return evaluate_terms(benzenoid_terms(spec, m, n))


def closed_form(spec: IndexSpec, family: Family) -> FactoredNumber:
    return evaluate_terms(closed_form_terms(spec, family))


def named_closed_form(idx: NamedIndex, family: Family) -> FactoredNumber:
    return closed_form(idx.spec, family)

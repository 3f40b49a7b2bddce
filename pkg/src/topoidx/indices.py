"""Multiplicative degree-based indices computed directly on a graph.

Three general families cover every index here:

* vertex power      ``prod_v deg(v)**s``
* edge sum power    ``prod_uv (deg(u) + deg(v))**a``
* edge product power ``prod_uv (deg(u) * deg(v))**a``

The six classical indices are fixed special cases (see :class:`NamedIndex`).
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass
from numbers import Integral, Real

from .errors import IsolatedVertexError, NonIntegerParameterError
from .factored import FactoredNumber, factor_small
from .graph import DegreePartition, EdgePartition, MolecularGraph, degree_partition, edge_partition


class IndexKind(enum.Enum):
    VERTEX_POWER = "wang"
    EDGE_SUM_POWER = "gz"
    EDGE_PRODUCT_POWER = "gzz"

    @property
    def symbol(self) -> str:
        return "s" if self is IndexKind.VERTEX_POWER else "a"


@dataclass(frozen=True)
class IndexSpec:
    kind: IndexKind
    parameter: float | int

    def __post_init__(self):
        if isinstance(self.parameter, bool) or not isinstance(self.parameter, Real):
            raise TypeError(f"parameter must be a real number, got {self.parameter!r}")
        if not math.isfinite(self.parameter):
            raise ValueError(f"parameter must be finite, got {self.parameter!r}")

    @property
    def is_integral(self) -> bool:
        p = self.parameter
        return isinstance(p, Integral) or float(p).is_integer()

    def exact_parameter(self) -> int:
        if not self.is_integral:
            raise NonIntegerParameterError(
                f"exact mode needs an integer {self.kind.symbol}, got {self.parameter!r}"
            )
        return int(self.parameter)

    @property
    def label(self) -> str:
        p = self.parameter
        if not isinstance(p, Integral) and float(p).is_integer():
            p = int(p)
        return f"{self.kind.value}({self.kind.symbol}={p})"


def vertex_power(s) -> IndexSpec:
    return IndexSpec(IndexKind.VERTEX_POWER, s)


def edge_sum_power(a) -> IndexSpec:
    return IndexSpec(IndexKind.EDGE_SUM_POWER, a)


def edge_product_power(a) -> IndexSpec:
    return IndexSpec(IndexKind.EDGE_PRODUCT_POWER, a)


class NamedIndex(enum.Enum):
    FIRST_MULTIPLICATIVE_ZAGREB = "z1"
    SECOND_MULTIPLICATIVE_ZAGREB = "z2"
    NARUMI_KATAYAMA = "nk"
    ELIASI_FIRST = "eliasi"
    HYPER_ZAGREB_FIRST = "hz1"
    HYPER_ZAGREB_SECOND = "hz2"

    @property
    def spec(self) -> IndexSpec:
        return _NAMED_SPECS[self]


_NAMED_SPECS = {
    NamedIndex.FIRST_MULTIPLICATIVE_ZAGREB: vertex_power(2),
    NamedIndex.SECOND_MULTIPLICATIVE_ZAGREB: edge_product_power(1),
    NamedIndex.NARUMI_KATAYAMA: vertex_power(1),
    NamedIndex.ELIASI_FIRST: edge_sum_power(1),
    NamedIndex.HYPER_ZAGREB_FIRST: edge_sum_power(2),
    NamedIndex.HYPER_ZAGREB_SECOND: edge_product_power(2),
}


def _terms(g: MolecularGraph, kind: IndexKind) -> list[int]:
    deg = g.degrees
    if kind is IndexKind.VERTEX_POWER:
        return list(deg)
    if kind is IndexKind.EDGE_SUM_POWER:
        return [deg[u] + deg[v] for u, v in g.edges]
    return [deg[u] * deg[v] for u, v in g.edges]


def _check_vertex_degrees(degrees) -> None:
    zeros = sum(1 for d in degrees if d == 0)
    if zeros:
        raise IsolatedVertexError(zeros)


def compute_via_partitions(dp: DegreePartition, ep: EdgePartition, spec: IndexSpec) -> FactoredNumber:
    """Aggregate the product over degree classes, then raise to the parameter."""
    p = spec.exact_parameter()
    out = FactoredNumber.one()
    if spec.kind is IndexKind.VERTEX_POWER:
        if dp.counts.get(0):
            raise IsolatedVertexError(dp.counts[0])
        for d, count in dp.counts.items():
            out = out * factor_small(d) ** count
    else:
        for (d1, d2), count in ep.counts.items():
            term = d1 + d2 if spec.kind is IndexKind.EDGE_SUM_POWER else d1 * d2
            out = out * factor_small(term) ** count
    return out**p


def compute_index(g: MolecularGraph, spec: IndexSpec) -> FactoredNumber:
    return compute_via_partitions(degree_partition(g), edge_partition(g), spec)


def compute_index_per_element(g: MolecularGraph, spec: IndexSpec) -> FactoredNumber:
    """Reference path: multiply one factored term per vertex or edge.

    Deliberately avoids the partitions so it can check :func:`compute_index`.
    """
    p = spec.exact_parameter()
    if spec.kind is IndexKind.VERTEX_POWER:
        _check_vertex_degrees(g.degrees)
    out = FactoredNumber.one()
    for t in _terms(g, spec.kind):
        out = out * factor_small(t) ** p
    return out


def compute_index_log(g: MolecularGraph, spec: IndexSpec) -> float:
    """log10 of the index; accepts real-valued parameters."""
    if spec.kind is IndexKind.VERTEX_POWER:
        _check_vertex_degrees(g.degrees)
    counts = Counter(_terms(g, spec.kind))
    total = math.fsum(c * math.log10(t) for t, c in counts.items())
    return float(spec.parameter) * total


def compute_named(g: MolecularGraph, idx: NamedIndex) -> FactoredNumber:
    return compute_index(g, idx.spec)

"""Exact multiplicative degree-based topological indices for PAH_n and B_{m,n}."""

__version__ = "0.1.0"

from .closed_forms import (
    benzenoid_closed_form,
    benzenoid_counts,
    benzenoid_partitions,
    closed_form,
    named_closed_form,
    pah_closed_form,
    pah_counts,
    pah_partitions,
)
from .errors import (
    DuplicateEdgeError,
    EdgeListParseError,
    EmptyGraphError,
    InvalidParameterError,
    IsolatedVertexError,
    NegativeExponentError,
    NonIntegerParameterError,
    OutOfRangeVertexError,
    SelfLoopError,
    TopoIdxError,
)
from .factored import DigitOverflow, FactoredNumber, factor_small, to_decimal, to_log10
from .families import Benzenoid, Pah
from .generators import generate, generate_benzenoid, generate_pah, pah_hydrogen_count
from .graph import (
    DegreePartition,
    EdgePartition,
    MolecularGraph,
    build_graph,
    degree,
    degree_partition,
    edge_partition,
    is_connected,
    read_edge_list,
    write_edge_list,
)
from .indices import (
    IndexKind,
    IndexSpec,
    NamedIndex,
    compute_index,
    compute_index_log,
    compute_index_per_element,
    compute_named,
    compute_via_partitions,
    edge_product_power,
    edge_sum_power,
    vertex_power,
)

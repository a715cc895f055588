"""Exact partition polynomials and minimal cut polynomials of graphs."""
from .closed_forms import FamilySpec, q_closed, q_closed_xy, q_kn_xy_partition_sum, stirling2
from .errors import (
    GraphError,
    GraphParseError,
    InvariantViolation,
    MalformedPolynomialError,
    PartitionError,
    PartpolyError,
    ResourceCapError,
)
from .families import make_family
from .formats import parse_graph, to_graph6
from .graph import Graph, bridges, cliqueify, components, contract, delete, extract_matching
from .invariants import InvariantReport, dowling_wilson_check, invariants_from_q, min_kcut_from_qxy
from .lattice import (
    BondLattice,
    chromatic_deletion_contraction,
    chromatic_via_rota,
    enumerate_connected_partitions,
    mobius,
    q_brute,
    q_brute_xy,
)
from .partition import (
    SetPartition,
    enumerate_partitions,
    induced_by_components,
    is_connected_partition,
    is_refinement,
    join,
    merge,
    restrict,
)
from .poly import BiPoly, UniPoly, divide_by_power, evaluate, set_y_to_one
from .recurrences import (
    q_auto,
    q_auto_xy,
    q_bridge_split,
    q_minus_cut,
    q_minus_matching,
    q_neighborhood_ie,
    q_vertex_decomposition,
    q_vertex_decomposition_xy,
    reduce_pendant,
)
from .scanner import ScanRecord, scan
from .splitting import Splitting, TTable, combine_t, find_separator, q_by_splitting, split_graph, t_table

__version__ = "0.1.0"

"""Hamiltonicity, toughness and traceability of coline graphs.

The coline graph co(G) has the edges of G as vertices, joined when they
share no endpoint (the complement of the line graph).  This package
provides the graph constructions, polynomial-time decision procedures for
co(G) based on complete characterisations, exact exponential-time oracles
that double-check every verdict, and an exhaustive small-graph sweep that
reproduces the exception catalogs from scratch.
"""

__version__ = "0.1.0"

from .graphcore import (
    Graph,
    GraphStats,
    add_dominating_vertex,
    basic_stats,
    build_named,
    coline,
    complement,
    components,
    disjoint_union,
    graph_power,
    is_connected,
    line_graph,
    strip_isolated,
)
from .graph6 import emit_graph6, parse_edge_list, parse_graph6
from .oracle import (
    CycleOrPath,
    IsoCertificate,
    RootSearch,
    ToughnessResult,
    ToughnessWitness,
    canonical_form,
    canonical_graph,
    cms_exact,
    contains_power_ham_cycle,
    contains_subgraph,
    find_roots,
    hamiltonian_cycle,
    hamiltonian_path,
    is_induced_free,
    is_isomorphic,
    is_tough,
    longest_cycle,
    vertex_connectivity,
)
from .characterize import (
    Catalog,
    ClauseVerdict,
    ColineCase,
    ColineClass,
    DecisionReport,
    ScopeError,
    build_report,
    classify_disconnected_coline,
    decide_coline_hamiltonian,
    decide_coline_tough,
    decide_coline_traceable,
    decide_wu_meng,
    is_pseudo_tough,
    is_type_A,
    load_catalog,
    rho,
)
from .sweep import (
    SweepConfig,
    SweepReport,
    bootstrap_catalog,
    enumerate_classes,
    enumerate_labeled,
    labeled_count,
    run_sweep,
    self_coline_census,
    whitney_census,
)

__all__ = [name for name in dir() if not name.startswith("_")]

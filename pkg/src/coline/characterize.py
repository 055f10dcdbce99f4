"""Polynomial-time decision procedures for coline graphs.

Each decision mirrors a complete characterisation: toughness and
Hamiltonicity of co(G) reduce to edge/degree counts, a handful of subgraph
tests and membership in small frozen exception catalogs.  The catalogs are
not hand-entered; they are produced once by the exhaustive sweep (see
``coline.sweep.bootstrap_catalog``) and validated against their defining
predicates on load.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from . import oracle
from .graph6 import emit_graph6, parse_graph6
from .graphcore import (
    Graph,
    add_dominating_vertex,
    build_named,
    coline,
    components,
    strip_isolated,
)

CATALOG_FORMAT = "coline-catalog v1"
CATALOG_ENV_VAR = "COLINE_CATALOG"

TOUGH_EXCEPTION_COUNT = 18
TRACE_EXCEPTION_COUNT = 9
WU_MENG_COUNT = 21

NAMED_CATALOG_GRAPHS = (
    "K5", "H1", "H2", "H3", "K3_circ_K1",
    "K3+P3", "K3+2K2", "C4+K2", "K3_plus", "K4_minus", "K4",
)


class ScopeError(ValueError):
    """Input outside the range where the characterisation applies."""


class CatalogError(RuntimeError):
    """Missing, malformed or internally inconsistent catalog data."""


class ColineCase(Enum):
    STAR = "star"
    TYPE_A = "type-A"
    C4 = "C4"
    F = "F_k"
    K4_MINUS = "K4_minus"
    K4 = "K4"
    CONNECTED = "connected"


@dataclass(frozen=True)
class ColineClass:
    """Which disconnection family co(G) falls into, with c(co(G)) and rho."""

    case: ColineCase
    parameter: int | None  # lambda for stars, k for F_k
    component_count: int
    rho: int | None


@dataclass(frozen=True)
class ClauseVerdict:
    """Outcome of one clause-based decision.

    ``clause`` is the first matching exception clause ("none" when the
    property holds); ``all_matches`` lists every clause that fired, since
    the clauses of a characterisation may overlap.
    """

    value: bool
    clause: str
    all_matches: tuple[str, ...]


@dataclass(frozen=True)
class Catalog:
    named: dict[str, Graph]
    toughness_exceptions: tuple[Graph, ...]
    trace_exceptions: tuple[Graph, ...]
    wu_meng_21: tuple[Graph, ...]
    version: str


@dataclass(frozen=True)
class DecisionReport:
    graph_id: str  # canonical graph6 of G
    m: int
    max_degree: int
    tough: ClauseVerdict
    hamiltonian: ClauseVerdict
    wu_meng: ClauseVerdict
    traceable: ClauseVerdict
    oracle_confirmed: dict | None


# --- Lemma-style classification of disconnected colines ----------------------

def is_type_A(g: Graph) -> bool:
    """Some edge meets every other edge, and co(G) has exactly 2 components."""
    m = g.m
    if m == 0:
        return False
    has_dominating_edge = any(
        g.degree(u) + g.degree(v) - 2 == m - 1 for u, v in g.edges()
    )
    if not has_dominating_edge:
        return False
    l, _ = coline(g)
    return len(components(l)) == 2


def rho(g: Graph) -> int | None:
    """|E(G)| + c(co(G)) when co(G) is disconnected, else None.

    Any supergraph of G with fewer than rho(G) edges cannot have a tough
    coline graph, which is what makes this quantity useful.
    """
    l, _ = coline(g)
    count = len(components(l))
    if count < 2:
        return None
    return g.m + count


def _is_star(g: Graph) -> int | None:
    """Number of leaves if g is K_{1,lambda} (lambda >= 1), else None."""
    if g.n < 2 or g.m != g.n - 1:
        return None
    degs = sorted(g.degrees())
    if degs[-1] == g.n - 1 and all(d == 1 for d in degs[:-1]):
        return g.n - 1
    return None


def classify_disconnected_coline(g: Graph) -> ColineClass:
    """Place g in the six-family classification of disconnected colines.

    Isolated vertices of g are ignored.  The families as literally stated
    overlap on K_{1,2} (a star whose single edge pair is mutually
    adjacent), so stars take precedence; the concrete small graphs are
    matched before the type-A fallback.
    """
    core, _ = strip_isolated(g)
    l, _ = coline(core)
    count = len(components(l))
    if count < 2:
        return ColineClass(ColineCase.CONNECTED, None, count, None)
    value = core.m + count

    leaves = _is_star(core)
    if leaves is not None:
        return ColineClass(ColineCase.STAR, leaves, count, value)
    if oracle.is_isomorphic(core, build_named("C4")):
        return ColineClass(ColineCase.C4, None, count, value)
    if oracle.is_isomorphic(core, build_named("K4_minus")):
        return ColineClass(ColineCase.K4_MINUS, None, count, value)
    if oracle.is_isomorphic(core, build_named("K4")):
        return ColineClass(ColineCase.K4, None, count, value)
    k = core.m - 1
    if k >= 2 and oracle.is_isomorphic(core, build_named(f"F{k}")):
        return ColineClass(ColineCase.F, k, count, value)
    if is_type_A(core):
        return ColineClass(ColineCase.TYPE_A, None, count, value)
    raise AssertionError(
        f"disconnected coline escaped the classification: {emit_graph6(core)}"
    )


# --- clause machinery ---------------------------------------------------------

def has_adjacent_max_degree_pair(g: Graph) -> bool:
    delta = g.max_degree()
    return any(
        g.degree(u) == delta and g.degree(v) == delta for u, v in g.edges()
    )


def _matches_catalog(core: Graph, members: tuple[Graph, ...]) -> bool:
    key = (core.n, core.m, tuple(sorted(core.degrees())))
    for member in members:
        if key != (member.n, member.m, tuple(sorted(member.degrees()))):
            continue
        if oracle.is_isomorphic(core, member):
            return True
    return False


def _verdict(matches: list[str]) -> ClauseVerdict:
    if matches:
        return ClauseVerdict(False, matches[0], tuple(matches))
    return ClauseVerdict(True, "none", ())


def decide_coline_tough(g: Graph, catalog: Catalog | None = None) -> ClauseVerdict:
    """Is co(G) tough?  Requires m >= 3 (smaller colines are degenerate)."""
    catalog = catalog or load_catalog()
    core, _ = strip_isolated(g)
    m = core.m
    if m < 3:
        raise ScopeError(f"toughness decision needs at least 3 edges, got {m}")
    delta = core.max_degree()
    matches = []
    if m < 2 * delta:
        matches.append("(i)")
    if m == 2 * delta and has_adjacent_max_degree_pair(core):
        matches.append("(ii)")
    if _matches_catalog(core, catalog.toughness_exceptions):
        matches.append("(iii)")
    return _verdict(matches)


def decide_coline_hamiltonian(g: Graph, catalog: Catalog | None = None) -> ClauseVerdict:
    """Is co(G) Hamiltonian?  Tough colines are Hamiltonian except for four
    root graphs; non-tough colines never are."""
    catalog = catalog or load_catalog()
    tough = decide_coline_tough(g, catalog)
    core, _ = strip_isolated(g)
    matches = []
    if not tough.value:
        matches.append(f"not-tough{tough.clause}")
    for name in ("K5", "H1", "H2", "H3"):
        if oracle.is_isomorphic(core, catalog.named[name]):
            matches.append(name)
    return _verdict(matches)


def decide_wu_meng(g: Graph, catalog: Catalog | None = None) -> ClauseVerdict:
    """The five-clause Hamiltonicity criterion for co(G).

    Subgraph tests in clause (iv) are non-induced containment.
    """
    catalog = catalog or load_catalog()
    core, _ = strip_isolated(g)
    m = core.m
    if m < 3:
        raise ScopeError(f"Hamiltonicity decision needs at least 3 edges, got {m}")
    delta = core.max_degree()
    matches = []
    if m < 2 * delta:
        matches.append("(i)")
    if m == 2 * delta and has_adjacent_max_degree_pair(core):
        matches.append("(ii)")
    if any(
        oracle.is_isomorphic(core, catalog.named[name])
        for name in ("K3+P3", "K3+2K2", "C4+K2")
    ):
        matches.append("(iii)")
    blockers = {6: ("K3_plus",), 7: ("K4_minus", "K3_circ_K1"), 8: ("K4",)}
    if m in blockers and any(
        oracle.contains_subgraph(core, catalog.named[name]) for name in blockers[m]
    ):
        matches.append("(iv)")
    if oracle.is_isomorphic(core, catalog.named["K5"]):
        matches.append("(v)")
    return _verdict(matches)


def decide_coline_traceable(g: Graph, catalog: Catalog | None = None) -> ClauseVerdict:
    """Does co(G) have a spanning path?  Requires m >= 2."""
    catalog = catalog or load_catalog()
    core, _ = strip_isolated(g)
    m = core.m
    if m < 2:
        raise ScopeError(f"traceability decision needs at least 2 edges, got {m}")
    delta = core.max_degree()
    matches = []
    if m < 2 * delta - 1:
        matches.append("(i)")
    if m == 2 * delta - 1 and has_adjacent_max_degree_pair(core):
        matches.append("(ii)")
    if _matches_catalog(core, catalog.trace_exceptions):
        matches.append("(iii)")
    if oracle.is_isomorphic(core, catalog.named["K3_circ_K1"]):
        matches.append("(iv)")
    return _verdict(matches)


def is_pseudo_tough(l: Graph) -> bool:
    """Is l with one added dominating vertex tough?"""
    return oracle.is_tough(add_dominating_vertex(l)).value


def build_report(g: Graph, catalog: Catalog | None = None, verify: bool = False) -> DecisionReport:
    """Full per-graph verdict bundle; with verify=True every verdict is
    confirmed against the exact oracle and witnesses are attached."""
    catalog = catalog or load_catalog()
    core, _ = strip_isolated(g)
    tough = decide_coline_tough(g, catalog)
    hamiltonian = decide_coline_hamiltonian(g, catalog)
    wu_meng = decide_wu_meng(g, catalog)
    traceable = decide_coline_traceable(g, catalog)
    confirmed = None
    if verify:
        l, _ = coline(core)
        tough_oracle = oracle.is_tough(l)
        cycle = oracle.hamiltonian_cycle(l)
        path = oracle.hamiltonian_path(l)
        confirmed = {
            "tough": {
                "value": tough_oracle.value,
                "vacuous": tough_oracle.vacuous,
                "agrees": tough_oracle.value == tough.value,
                "witness": None
                if tough_oracle.witness is None
                else {
                    "cutset": list(tough_oracle.witness.cutset),
                    "components_after": tough_oracle.witness.components_after,
                },
            },
            "hamiltonian": {
                "value": cycle is not None,
                "agrees": (cycle is not None) == hamiltonian.value,
                "witness": None if cycle is None else list(cycle.vertices),
            },
            "traceable": {
                "value": path is not None,
                "agrees": (path is not None) == traceable.value,
                "witness": None if path is None else list(path.vertices),
            },
        }
    return DecisionReport(
        graph_id=emit_graph6(oracle.canonical_graph(g)),
        m=core.m,
        max_degree=core.max_degree(),
        tough=tough,
        hamiltonian=hamiltonian,
        wu_meng=wu_meng,
        traceable=traceable,
        oracle_confirmed=confirmed,
    )


# --- catalog file handling ----------------------------------------------------

def emit_catalog(catalog: Catalog) -> str:
    lines = [CATALOG_FORMAT]
    lines.append("[named]")
    for name in NAMED_CATALOG_GRAPHS:
        lines.append(f"{name} {emit_graph6(catalog.named[name])}")
    for section, graphs in (
        ("tough18", catalog.toughness_exceptions),
        ("trace9", catalog.trace_exceptions),
        ("wumeng21", catalog.wu_meng_21),
    ):
        lines.append(f"[{section}]")
        lines.extend(emit_graph6(g) for g in graphs)
    return "\n".join(lines) + "\n"


def parse_catalog(text: str) -> Catalog:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != CATALOG_FORMAT:
        raise CatalogError(f"bad or missing format header, expected {CATALOG_FORMAT!r}")
    named: dict[str, Graph] = {}
    sections: dict[str, list[Graph]] = {"tough18": [], "trace9": [], "wumeng21": []}
    current = None
    for line in lines[1:]:
        if line.startswith("["):
            current = line.strip("[]")
            if current != "named" and current not in sections:
                raise CatalogError(f"unknown section {current!r}")
            continue
        if current is None:
            raise CatalogError(f"data before any section: {line!r}")
        if current == "named":
            name, _, code = line.partition(" ")
            if not code:
                raise CatalogError(f"named entry without graph6 data: {line!r}")
            named[name] = parse_graph6(code)
        else:
            sections[current].append(parse_graph6(line))
    return Catalog(
        named=named,
        toughness_exceptions=tuple(sections["tough18"]),
        trace_exceptions=tuple(sections["trace9"]),
        wu_meng_21=tuple(sections["wumeng21"]),
        version=CATALOG_FORMAT,
    )


def validate_catalog(catalog: Catalog) -> None:
    """Check cardinalities and every member's defining predicate.

    Raises CatalogError on the first failure; a failure signals a corrupted
    file or a bootstrap bug, never something to adjust silently.
    """
    for name in NAMED_CATALOG_GRAPHS:
        if name not in catalog.named:
            raise CatalogError(f"missing named graph {name}")
        if oracle.is_isomorphic(catalog.named[name], build_named(name)) is None:
            raise CatalogError(f"named graph {name} does not match its construction")
    counts = (
        (catalog.toughness_exceptions, TOUGH_EXCEPTION_COUNT, "tough18"),
        (catalog.trace_exceptions, TRACE_EXCEPTION_COUNT, "trace9"),
        (catalog.wu_meng_21, WU_MENG_COUNT, "wumeng21"),
    )
    for graphs, expected, label in counts:
        if len(graphs) != expected:
            raise CatalogError(f"{label} has {len(graphs)} members, expected {expected}")
        if len({oracle.canonical_form(g) for g in graphs}) != expected:
            raise CatalogError(f"{label} contains isomorphic duplicates")
    corona = build_named("K3_circ_K1")
    for g in catalog.toughness_exceptions:
        delta = g.max_degree()
        if g.m < 2 * delta or (g.m == 2 * delta and has_adjacent_max_degree_pair(g)):
            raise CatalogError("tough18 member already covered by a counting clause")
        l, _ = coline(g)
        if oracle.is_tough(l).value:
            raise CatalogError(f"tough18 member {emit_graph6(g)} has a tough coline")
    for g in catalog.trace_exceptions:
        delta = g.max_degree()
        if g.m < 2 * delta - 1 or (g.m == 2 * delta - 1 and has_adjacent_max_degree_pair(g)):
            raise CatalogError("trace9 member already covered by a counting clause")
        if oracle.is_isomorphic(g, corona):
            raise CatalogError("trace9 must not contain the corona of K3")
        l, _ = coline(g)
        if oracle.hamiltonian_path(l) is not None:
            raise CatalogError(f"trace9 member {emit_graph6(g)} has a traceable coline")
    tough_keys = {oracle.canonical_form(g) for g in catalog.toughness_exceptions}
    h_keys = {oracle.canonical_form(build_named(name)) for name in ("H1", "H2", "H3")}
    wu_keys = {oracle.canonical_form(g) for g in catalog.wu_meng_21}
    if wu_keys != tough_keys | h_keys:
        raise CatalogError("wumeng21 must equal tough18 plus H1, H2, H3")
    for g in catalog.wu_meng_21:
        l, _ = coline(g)
        if oracle.hamiltonian_cycle(l) is not None:
            raise CatalogError(f"wumeng21 member {emit_graph6(g)} has a Hamiltonian coline")


_DEFAULT_CATALOG: Catalog | None = None


def load_catalog(path: str | os.PathLike | None = None) -> Catalog:
    """Load and validate a catalog.

    Resolution order: explicit path, the COLINE_CATALOG environment
    variable, then the packaged data file.  The packaged catalog is cached
    after the first load.
    """
    global _DEFAULT_CATALOG
    if path is None:
        path = os.environ.get(CATALOG_ENV_VAR) or None
    if path is None:
        if _DEFAULT_CATALOG is None:
            try:
                text = (
                    resources.files("coline").joinpath("data/catalog.txt").read_text()
                )
            except FileNotFoundError as exc:
                raise CatalogError(
                    "packaged catalog missing; run the catalog bootstrap"
                ) from exc
            catalog = parse_catalog(text)
            validate_catalog(catalog)
            _DEFAULT_CATALOG = catalog
        return _DEFAULT_CATALOG
    try:
        with open(path, "r", encoding="ascii") as handle:
            text = handle.read()
    except OSError as exc:
        raise CatalogError(f"cannot read catalog at {path}: {exc}") from exc
    catalog = parse_catalog(text)
    validate_catalog(catalog)
    return catalog

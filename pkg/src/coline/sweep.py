"""Exhaustive small-graph verification harness.

The sweep walks every isomorphism class of graphs without isolated
vertices inside configurable size bounds, decides toughness, Hamiltonicity
and traceability of each coline graph twice (characterisation vs exact
oracle) and records any disagreement.  It also accumulates the exception
censuses and can bootstrap the frozen catalogs from scratch.

Verdicts are isomorphism-invariant (a tested property), so checking one
canonical representative per class is equivalent to checking every
labelled graph; classes are produced by edge-augmentation rather than by
streaming all labelled bitmasks, which keeps the 8-vertex sweep tractable.
The labelled stream is still available for small ranges.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool

from . import characterize, lemmacheck, oracle
from .characterize import (
    Catalog,
    CatalogError,
    ClauseVerdict,
    ColineCase,
    emit_catalog,
    has_adjacent_max_degree_pair,
    validate_catalog,
)
from .graphcore import Graph, build_named, coline, components, is_connected, line_graph

ALL_CHECKS = frozenset(
    {
        "toughness",
        "hamiltonicity",
        "traceability",
        "classification",
        "lemma_properties",
        "induced_freeness",
        "self_coline",
        "whitney",
    }
)

DEFAULT_MAX_VERTICES = 8
DEFAULT_MAX_EDGES = 10

_SUBGRAPH_BLOCKERS = {6: ("K3_plus",), 7: ("K4_minus", "K3_circ_K1"), 8: ("K4",)}


@dataclass(frozen=True)
class SweepConfig:
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_edges: int = DEFAULT_MAX_EDGES
    checks: frozenset[str] = ALL_CHECKS
    worker_count: int = 1
    output_path: str | None = None

    def __post_init__(self) -> None:
        if not 2 <= self.max_vertices <= 10:
            raise ValueError("max_vertices must be between 2 and 10")
        if not 1 <= self.max_edges <= self.max_vertices * (self.max_vertices - 1) // 2:
            raise ValueError("max_edges must fit on max_vertices vertices")
        unknown = self.checks - ALL_CHECKS
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")


@dataclass
class SweepReport:
    graphs_scanned: int
    mismatches: list[tuple[str, str, str, str]]  # canon, check, theorem, oracle
    exception_census: dict[str, frozenset[str]]
    timings: dict[str, float]
    config: SweepConfig
    partial: bool = False
    resume_at: int = 0
    extras: dict = field(default_factory=dict)


def enumerate_labeled(max_vertices: int, max_edges: int):
    """Every labelled graph on exactly max_vertices vertices with at most
    max_edges edges, as ascending edge-subset bitmasks."""
    if max_vertices < 0 or max_edges < 0:
        raise ValueError("bounds must be non-negative")
    slots = list(combinations(range(max_vertices), 2))
    for mask in range(1 << len(slots)):
        if mask.bit_count() > max_edges:
            continue
        yield Graph.from_edges(
            max_vertices, [slots[i] for i in range(len(slots)) if mask >> i & 1]
        )


def labeled_count(max_vertices: int, max_edges: int) -> int:
    """How many graphs enumerate_labeled yields, without enumerating."""
    from math import comb

    if max_vertices < 0 or max_edges < 0:
        raise ValueError("bounds must be non-negative")
    slots = max_vertices * (max_vertices - 1) // 2
    return sum(comb(slots, m) for m in range(min(max_edges, slots) + 1))


def enumerate_classes(max_vertices: int, max_edges: int):
    """Canonical representatives of every isomorphism class with 1 to
    max_edges edges and no isolated vertices on at most max_vertices
    vertices, in deterministic order."""
    yield from oracle.iter_graph_classes(max_vertices, max_edges)


# --- per-class examination ---------------------------------------------------

_WORKER_STATE: dict = {}


def _examine_class(g: Graph, catalog: Catalog, checks: frozenset[str]) -> dict:
    canon = oracle.canonical_form(g).decode("ascii")
    record: dict = {"canon": canon, "mismatches": [], "census": [], "timings": {}}
    l, _ = coline(g)

    def clock(name: str, start: float) -> None:
        record["timings"][name] = record["timings"].get(name, 0.0) + time.perf_counter() - start

    tough_oracle = None
    ham_exists = None
    if "toughness" in checks and g.m >= 3:
        start = time.perf_counter()
        verdict = characterize.decide_coline_tough(g, catalog)
        tough_oracle = oracle.is_tough(l)
        if verdict.value != tough_oracle.value:
            record["mismatches"].append(
                ("toughness", _fmt(verdict), str(tough_oracle.value))
            )
        if verdict.clause == "(iii)":
            record["census"].append("tough-exceptions")
        clock("toughness", start)

    if "hamiltonicity" in checks and g.m >= 3:
        start = time.perf_counter()
        main = characterize.decide_coline_hamiltonian(g, catalog)
        five_clause = characterize.decide_wu_meng(g, catalog)
        ham_exists = oracle.hamiltonian_cycle(l) is not None
        if main.value != ham_exists:
            record["mismatches"].append(("hamiltonicity", _fmt(main), str(ham_exists)))
        if five_clause.value != ham_exists:
            record["mismatches"].append(("wu-meng", _fmt(five_clause), str(ham_exists)))
        cms_ge2 = oracle.contains_power_ham_cycle(l, 1)
        if cms_ge2 != main.value:
            record["mismatches"].append(("cms-ge2", _fmt(main), str(cms_ge2)))
        fired = set(five_clause.all_matches)
        if fired & {"(iii)", "(iv)"} and not fired & {"(i)", "(ii)"}:
            record["census"].append("wu-meng-21")
        clock("hamiltonicity", start)

    if "traceability" in checks and g.m >= 2:
        start = time.perf_counter()
        verdict = characterize.decide_coline_traceable(g, catalog)
        path = oracle.hamiltonian_path(l)
        if verdict.value != (path is not None):
            record["mismatches"].append(
                ("traceability", _fmt(verdict), str(path is not None))
            )
        if verdict.clause == "(iii)":
            record["census"].append("trace-exceptions")
        if verdict.clause == "(iv)":
            record["census"].append("trace-corona")
        clock("traceability", start)

    if "classification" in checks:
        start = time.perf_counter()
        klass = characterize.classify_disconnected_coline(g)
        problem = _classification_problem(g, l, klass)
        if problem:
            record["mismatches"].append(("classification", str(klass.case.value), problem))
        clock("classification", start)

    if "induced_freeness" in checks:
        start = time.perf_counter()
        if not oracle.is_induced_free(l, _forbidden_pattern()):
            record["mismatches"].append(("induced-freeness", "free", "induced copy found"))
        clock("induced_freeness", start)

    if tough_oracle is not None and ham_exists is not None:
        if tough_oracle.value and not ham_exists:
            record["census"].append("tough-not-hamiltonian")
            if "lemma_properties" in checks:
                start = time.perf_counter()
                cycle = oracle.longest_cycle(l)
                ctx = lemmacheck.make_context(l, cycle)
                for violation in lemmacheck.run_all_checks(ctx):
                    record["mismatches"].append(
                        (f"lemma:{violation.kind}", "no violation", violation.detail)
                    )
                for violation in lemmacheck.check_trivial_components(ctx, g):
                    record["mismatches"].append(
                        ("lemma:trivial-components", "no violation", violation.detail)
                    )
                clock("lemma_properties", start)

    return record


_PATTERN_CACHE: dict[str, Graph] = {}


def _forbidden_pattern() -> Graph:
    if "K2+3K1" not in _PATTERN_CACHE:
        _PATTERN_CACHE["K2+3K1"] = build_named("K2+3K1")
    return _PATTERN_CACHE["K2+3K1"]


def _fmt(verdict: ClauseVerdict) -> str:
    return f"{verdict.value} clause={verdict.clause}"


_CASE_RULES = {
    ColineCase.STAR: lambda p, m: (p, 2 * p),
    ColineCase.TYPE_A: lambda p, m: (2, m + 2),
    ColineCase.C4: lambda p, m: (2, 6),
    ColineCase.F: lambda p, m: (3, p + 4),
    ColineCase.K4_MINUS: lambda p, m: (3, 8),
    ColineCase.K4: lambda p, m: (3, 9),
}


def _classification_problem(g: Graph, l: Graph, klass) -> str | None:
    count = len(components(l))
    if klass.component_count != count:
        return f"component count {count} != reported {klass.component_count}"
    if klass.case is ColineCase.CONNECTED:
        return "coline disconnected but classified connected" if count >= 2 else None
    if count < 2:
        return "coline connected but classified disconnected"
    expected_c, expected_rho = _CASE_RULES[klass.case](klass.parameter, g.m)
    if (klass.component_count, klass.rho) != (expected_c, expected_rho):
        return f"(c, rho) = ({count}, {klass.rho}) != expected ({expected_c}, {expected_rho})"
    return None


# --- sweep driver --------------------------------------------------------------

def _init_worker(catalog: Catalog, checks: frozenset[str]) -> None:
    _WORKER_STATE["catalog"] = catalog
    _WORKER_STATE["checks"] = checks


def _examine_batch(graphs: list[Graph]) -> list[dict]:
    catalog = _WORKER_STATE["catalog"]
    checks = _WORKER_STATE["checks"]
    return [_examine_class(g, catalog, checks) for g in graphs]


def run_sweep(config: SweepConfig, catalog: Catalog | None = None) -> SweepReport:
    """Cross-verify every decision procedure over the configured range.

    Worker failures surface as a partial report (the resume cursor counts
    completed classes) rather than a crash.
    """
    catalog = catalog or characterize.load_catalog()
    classes = list(enumerate_classes(config.max_vertices, config.max_edges))
    start = time.perf_counter()
    records: list[dict] = []
    extras: dict = {}
    partial = False
    if config.worker_count == 1:
        try:
            for g in classes:
                records.append(_examine_class(g, catalog, config.checks))
        except Exception as exc:  # noqa: BLE001 - partial report carries the error
            partial = True
            extras["error"] = repr(exc)
    else:
        size = max(1, len(classes) // (config.worker_count * 8))
        batches = [classes[i : i + size] for i in range(0, len(classes), size)]
        with Pool(
            config.worker_count, initializer=_init_worker, initargs=(catalog, config.checks)
        ) as pool:
            try:
                for batch in pool.imap(_examine_batch, batches):
                    records.extend(batch)
            except Exception as exc:  # noqa: BLE001
                partial = True
                extras["error"] = repr(exc)
    records.sort(key=lambda r: r["canon"])

    mismatches = []
    census: dict[str, set[str]] = {}
    timings: dict[str, float] = {}
    for record in records:
        for check, theorem, seen in record["mismatches"]:
            mismatches.append((record["canon"], check, theorem, seen))
        for key in record["census"]:
            census.setdefault(key, set()).add(record["canon"])
        for check, dt in record["timings"].items():
            timings[check] = timings.get(check, 0.0) + dt

    if "self_coline" in config.checks:
        forms = self_coline_census(min(config.max_vertices, 7))
        census["self-coline"] = {f.decode("ascii") for f in forms}
    if "whitney" in config.checks:
        pairs = whitney_census(min(config.max_vertices, 6))
        census["whitney-pairs"] = {
            " ".join(sorted(oracle.canonical_form(g).decode("ascii") for g in pair))
            for pair in pairs
        }
    timings["total"] = time.perf_counter() - start
    report = SweepReport(
        graphs_scanned=len(records),
        mismatches=mismatches,
        exception_census={k: frozenset(v) for k, v in sorted(census.items())},
        timings=timings,
        config=config,
        partial=partial,
        resume_at=len(records),
        extras=extras,
    )
    if config.output_path:
        with open(config.output_path, "w", encoding="ascii") as handle:
            handle.write(report_to_text(report))
    return report


def expected_census(catalog: Catalog, max_vertices: int, max_edges: int) -> dict[str, frozenset[str]]:
    """The catalog-derived censuses restricted to a sweep range."""

    def in_range(g: Graph) -> bool:
        return g.n <= max_vertices and g.m <= max_edges

    def forms(graphs) -> frozenset[str]:
        return frozenset(
            oracle.canonical_form(g).decode("ascii") for g in graphs if in_range(g)
        )

    exceptional = [catalog.named[name] for name in ("K5", "H1", "H2", "H3")]
    corona = catalog.named["K3_circ_K1"]
    return {
        "tough-exceptions": forms(catalog.toughness_exceptions),
        "trace-exceptions": forms(catalog.trace_exceptions),
        "trace-corona": forms([corona]),
        "wu-meng-21": forms(catalog.wu_meng_21),
        "tough-not-hamiltonian": forms(exceptional),
    }


def report_to_text(report: SweepReport) -> str:
    cfg = report.config
    lines = [
        "coline sweep report",
        f"bounds: max_vertices={cfg.max_vertices} max_edges={cfg.max_edges}",
        "bound rationale: the counting clauses settle every graph analytically; "
        "all catalogued exceptions have at most 8 edges and 8 non-isolated "
        "vertices, and the largest named exception has 10 edges.",
        f"checks: {', '.join(sorted(cfg.checks))}",
        f"workers: {cfg.worker_count}",
        f"classes scanned: {report.graphs_scanned}",
        f"partial: {report.partial} (resume cursor {report.resume_at})",
        "",
        f"mismatches: {len(report.mismatches)}",
    ]
    for canon, check, theorem, seen in report.mismatches:
        lines.append(f"  {canon}  {check}  theorem={theorem}  oracle={seen}")
    lines.append("")
    lines.append("census:")
    for key, forms in sorted(report.exception_census.items()):
        lines.append(f"  {key}: {len(forms)}")
        for form in sorted(forms):
            lines.append(f"    {form}")
    lines.append("")
    lines.append("timings (s):")
    for key, dt in sorted(report.timings.items()):
        lines.append(f"  {key}: {dt:.3f}")
    return "\n".join(lines) + "\n"


# --- catalog bootstrap ----------------------------------------------------------

def bootstrap_catalog(
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_edges: int = DEFAULT_MAX_EDGES,
    output_path: str | None = None,
) -> tuple[Catalog, dict]:
    """Derive the exception catalogs from the oracle alone and freeze them.

    Counts that differ from 18/9/21 abort loudly: that means an oracle or
    enumeration bug (or a genuine discrepancy), never data to adjust.
    """
    corona = build_named("K3_circ_K1")
    named = {name: build_named(name) for name in characterize.NAMED_CATALOG_GRAPHS}
    tough_exceptions: dict[bytes, Graph] = {}
    trace_exceptions: dict[bytes, Graph] = {}
    wu_meng: dict[bytes, Graph] = {}

    for g in enumerate_classes(max_vertices, max_edges):
        delta = g.max_degree()
        first = g.m < 2 * delta
        second = g.m == 2 * delta and has_adjacent_max_degree_pair(g)
        if g.m >= 3 and not first and not second:
            l, _ = coline(g)
            if not oracle.is_tough(l).value:
                tough_exceptions[oracle.canonical_form(g)] = g
            named_match = any(
                oracle.is_isomorphic(g, named[name])
                for name in ("K3+P3", "K3+2K2", "C4+K2")
            )
            subgraph_match = g.m in _SUBGRAPH_BLOCKERS and any(
                oracle.contains_subgraph(g, named[name])
                for name in _SUBGRAPH_BLOCKERS[g.m]
            )
            if named_match or subgraph_match:
                wu_meng[oracle.canonical_form(g)] = g
        if g.m >= 2:
            trace_first = g.m < 2 * delta - 1
            trace_second = g.m == 2 * delta - 1 and has_adjacent_max_degree_pair(g)
            if not trace_first and not trace_second:
                if oracle.is_isomorphic(g, corona):
                    continue
                l, _ = coline(g)
                if oracle.hamiltonian_path(l) is None:
                    trace_exceptions[oracle.canonical_form(g)] = g

    summary = {
        "tough_count": len(tough_exceptions),
        "trace_count": len(trace_exceptions),
        "wu_meng_count": len(wu_meng),
        "max_exception_vertices": max(
            (g.n for g in tough_exceptions.values()), default=0
        ),
    }
    expected = (
        (len(tough_exceptions), characterize.TOUGH_EXCEPTION_COUNT, "tough"),
        (len(trace_exceptions), characterize.TRACE_EXCEPTION_COUNT, "trace"),
        (len(wu_meng), characterize.WU_MENG_COUNT, "wu-meng"),
    )
    for got, want, label in expected:
        if got != want:
            raise CatalogError(
                f"bootstrap found {got} {label} exceptions, expected {want}; "
                "this signals a bug or a genuine discrepancy, not data to adjust"
            )
    catalog = Catalog(
        named=named,
        toughness_exceptions=tuple(tough_exceptions[k] for k in sorted(tough_exceptions)),
        trace_exceptions=tuple(trace_exceptions[k] for k in sorted(trace_exceptions)),
        wu_meng_21=tuple(wu_meng[k] for k in sorted(wu_meng)),
        version=characterize.CATALOG_FORMAT,
    )
    validate_catalog(catalog)
    if output_path:
        with open(output_path, "w", encoding="ascii") as handle:
            handle.write(emit_catalog(catalog))
    return catalog, summary


# --- standalone censuses ---------------------------------------------------------

def self_coline_census(max_vertices: int = 7) -> frozenset[bytes]:
    """Canonical forms of all G (no isolated vertices, at most max_vertices
    vertices) with co(G) isomorphic to G.  Such G must have m = n."""
    if max_vertices > 8:
        raise ValueError("census budget is max_vertices <= 8")
    found = set()
    for g in enumerate_classes(max_vertices, max_vertices):
        if g.m != g.n:
            continue
        l, _ = coline(g)
        key = oracle.canonical_form(g)
        if oracle.canonical_form(l) == key:
            found.add(key)
    return frozenset(found)


def whitney_census(max_vertices: int = 6) -> tuple[tuple[Graph, Graph], ...]:
    """All pairs of non-isomorphic connected graphs on at most max_vertices
    vertices whose line graphs are isomorphic."""
    if max_vertices > 6:
        raise ValueError("census budget is max_vertices <= 6")
    groups: dict[bytes, list[Graph]] = {}
    limit = max_vertices * (max_vertices - 1) // 2
    for g in enumerate_classes(max_vertices, limit):
        if not is_connected(g):
            continue
        lg, _ = line_graph(g)
        groups.setdefault(oracle.canonical_form(lg), []).append(g)
    pairs = []
    for key in sorted(groups):
        members = groups[key]
        for a, b in combinations(members, 2):
            pairs.append((a, b))
    return tuple(pairs)

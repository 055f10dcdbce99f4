import random

import pytest

from coline.characterize import (
    CatalogError,
    ColineCase,
    ScopeError,
    build_report,
    classify_disconnected_coline,
    decide_coline_hamiltonian,
    decide_coline_tough,
    decide_coline_traceable,
    decide_wu_meng,
    emit_catalog,
    is_pseudo_tough,
    is_type_A,
    load_catalog,
    parse_catalog,
    rho,
    validate_catalog,
)
from coline.graphcore import Graph, build_named, coline
from coline.oracle import canonical_form, is_isomorphic


def test_classify_examples():
    klass = classify_disconnected_coline(build_named("K1_4"))
    assert (klass.case, klass.parameter, klass.component_count, klass.rho) == (
        ColineCase.STAR, 4, 4, 8,
    )
    klass = classify_disconnected_coline(build_named("P4"))
    assert (klass.case, klass.component_count, klass.rho) == (ColineCase.TYPE_A, 2, 5)
    klass = classify_disconnected_coline(build_named("K4_minus"))
    assert (klass.case, klass.component_count, klass.rho) == (ColineCase.K4_MINUS, 3, 8)
    klass = classify_disconnected_coline(build_named("C6"))
    assert klass.case is ColineCase.CONNECTED and klass.rho is None
    klass = classify_disconnected_coline(build_named("C4"))
    assert (klass.case, klass.rho) == (ColineCase.C4, 6)
    klass = classify_disconnected_coline(build_named("K4"))
    assert (klass.case, klass.rho) == (ColineCase.K4, 9)
    klass = classify_disconnected_coline(build_named("F5"))
    assert (klass.case, klass.parameter, klass.rho) == (ColineCase.F, 5, 9)
    # K3 is the k=2 member of the F family
    klass = classify_disconnected_coline(build_named("K3"))
    assert (klass.case, klass.parameter, klass.rho) == (ColineCase.F, 2, 6)


def test_classify_star_precedence_over_type_a():
    # K_{1,2} fits both the star family and the type-A definition
    p3 = build_named("P3")
    assert is_type_A(p3)
    klass = classify_disconnected_coline(p3)
    assert (klass.case, klass.parameter, klass.rho) == (ColineCase.STAR, 2, 4)


def test_is_type_a():
    assert is_type_A(build_named("P4"))
    assert not is_type_A(build_named("C4"))
    assert not is_type_A(build_named("K1_3"))


def test_rho():
    assert rho(build_named("C4")) == 6
    assert rho(build_named("F5")) == 9
    assert rho(build_named("C6")) is None


def test_rho_is_a_toughness_obstruction():
    # a supergraph of G' with fewer than rho(G') edges never has a tough
    # coline graph: the added edges form a cutset leaving c(co(G')) parts
    from coline.oracle import is_tough

    for name in ("C4", "K1_3", "F3", "K4_minus", "K4"):
        base = build_named(name)
        bound = rho(base)
        assert bound is not None
        room = bound - 1 - base.m
        if room <= 0:
            continue
        # grow by pendant edges on fresh vertices, staying under the bound
        grown = base
        for extra in range(room):
            grown = Graph(grown.n + 1, grown.adj + (0,)).with_edge(0, grown.n)
            assert grown.m < bound
            l, _ = coline(grown)
            assert not is_tough(l).value


def test_classify_strips_isolated_vertices():
    g = build_named("C4")
    padded = Graph(7, g.adj + (0, 0, 0))
    klass = classify_disconnected_coline(padded)
    assert (klass.case, klass.component_count, klass.rho) == (ColineCase.C4, 2, 6)


def test_decide_tough(catalog):
    verdict = decide_coline_tough(build_named("K1_3"), catalog)
    assert (verdict.value, verdict.clause) == (False, "(i)")
    verdict = decide_coline_tough(build_named("C4+K2"), catalog)
    assert (verdict.value, verdict.clause) == (False, "(iii)")
    assert decide_coline_tough(build_named("K5"), catalog).value
    assert decide_coline_tough(build_named("H1"), catalog).value
    verdict = decide_coline_tough(build_named("C4"), catalog)
    assert (verdict.value, verdict.clause) == (False, "(ii)")


def test_decide_hamiltonian(catalog):
    verdict = decide_coline_hamiltonian(build_named("K5"), catalog)
    assert (verdict.value, verdict.clause) == (False, "K5")
    verdict = decide_coline_hamiltonian(build_named("H3"), catalog)
    assert (verdict.value, verdict.clause) == (False, "H3")
    assert decide_coline_hamiltonian(build_named("C6"), catalog).value
    verdict = decide_coline_hamiltonian(build_named("K1_4"), catalog)
    assert not verdict.value and verdict.clause.startswith("not-tough")


def test_decide_wu_meng(catalog):
    verdict = decide_wu_meng(build_named("K3+2K2"), catalog)
    assert (verdict.value, verdict.clause) == (False, "(iii)")
    verdict = decide_wu_meng(build_named("H2"), catalog)
    assert (verdict.value, verdict.clause) == (False, "(iv)")
    verdict = decide_wu_meng(build_named("K5"), catalog)
    assert (verdict.value, verdict.clause) == (False, "(v)")
    assert decide_wu_meng(build_named("C6"), catalog).value


def test_decide_traceable(catalog):
    verdict = decide_coline_traceable(build_named("K3_circ_K1"), catalog)
    assert (verdict.value, verdict.clause) == (False, "(iv)")
    verdict = decide_coline_traceable(build_named("P3"), catalog)
    assert (verdict.value, verdict.clause) == (False, "(i)")
    assert decide_coline_traceable(build_named("K5"), catalog).value
    verdict = decide_coline_traceable(build_named("C4"), catalog)
    assert (verdict.value, verdict.clause) == (False, "(iii)")


def test_scope_errors(catalog):
    with pytest.raises(ScopeError):
        decide_coline_tough(build_named("K2"), catalog)
    with pytest.raises(ScopeError):
        decide_wu_meng(build_named("2K2"), catalog)
    with pytest.raises(ScopeError):
        decide_coline_traceable(build_named("K2"), catalog)
    # m = 2 is enough for traceability
    assert not decide_coline_traceable(build_named("P3"), catalog).value


def test_verdicts_ignore_isolated_vertices(catalog):
    g = build_named("K5")
    padded = Graph(7, g.adj + (0, 0))
    assert decide_coline_hamiltonian(padded, catalog) == decide_coline_hamiltonian(g, catalog)
    assert decide_coline_tough(padded, catalog) == decide_coline_tough(g, catalog)
    assert decide_coline_traceable(padded, catalog) == decide_coline_traceable(g, catalog)


def test_verdicts_isomorphism_invariant(catalog, classes_sweep_range):
    rng = random.Random(3)
    for g in rng.sample([g for g in classes_sweep_range if g.m >= 3], 40):
        perm = list(range(g.n))
        rng.shuffle(perm)
        relabeled = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert decide_coline_tough(g, catalog) == decide_coline_tough(relabeled, catalog)
        assert decide_wu_meng(g, catalog) == decide_wu_meng(relabeled, catalog)
        assert decide_coline_hamiltonian(g, catalog) == decide_coline_hamiltonian(
            relabeled, catalog
        )
        assert decide_coline_traceable(g, catalog) == decide_coline_traceable(
            relabeled, catalog
        )


def test_is_pseudo_tough():
    corona_coline, _ = coline(build_named("K3_circ_K1"))
    assert is_pseudo_tough(corona_coline)
    assert not is_pseudo_tough(Graph(2, (0, 0)))
    prism, _ = coline(build_named("C6"))
    assert is_pseudo_tough(prism)


def test_report_implications(catalog, classes_sweep_range):
    rng = random.Random(5)
    for g in rng.sample([g for g in classes_sweep_range if g.m >= 3], 30):
        report = build_report(g, catalog)
        if report.hamiltonian.value:
            assert report.tough.value
            assert report.traceable.value
        assert report.hamiltonian.value == report.wu_meng.value


def test_report_verify_agrees(catalog):
    for name in ("K5", "H1", "C6", "K3_circ_K1", "C4+K2"):
        report = build_report(build_named(name), catalog, verify=True)
        assert report.oracle_confirmed is not None
        for entry in report.oracle_confirmed.values():
            assert entry["agrees"]


def test_catalog_counts(catalog):
    assert len(catalog.toughness_exceptions) == 18
    assert len(catalog.trace_exceptions) == 9
    assert len(catalog.wu_meng_21) == 21
    member_forms = {canonical_form(g) for g in catalog.toughness_exceptions}
    assert canonical_form(build_named("C4+K2")) in member_forms
    for name in ("K3+P3", "K3+2K2", "K4+K2"):
        assert canonical_form(build_named(name)) in member_forms
    # H1, H2, H3 have tough colines, so they are not toughness exceptions
    for name in ("H1", "H2", "H3"):
        assert canonical_form(build_named(name)) not in member_forms


def test_catalog_round_trip(catalog):
    text = emit_catalog(catalog)
    again = parse_catalog(text)
    validate_catalog(again)
    assert [canonical_form(g) for g in again.toughness_exceptions] == [
        canonical_form(g) for g in catalog.toughness_exceptions
    ]


def test_catalog_rejects_corruption(catalog, tmp_path):
    with pytest.raises(CatalogError):
        parse_catalog("nonsense v9\n[tough18]\n")
    text = emit_catalog(catalog)
    # drop one toughness exception: cardinality check must fire
    lines = text.splitlines()
    index = lines.index("[tough18]") + 1
    removed = lines[:index] + lines[index + 1 :]
    broken = parse_catalog("\n".join(removed) + "\n")
    with pytest.raises(CatalogError):
        validate_catalog(broken)
    # and a wrong member must fail its defining predicate
    swapped = text.replace(lines[index], "D~{")  # K5 has a tough coline
    with pytest.raises(CatalogError):
        validate_catalog(parse_catalog(swapped))
    path = tmp_path / "missing.txt"
    with pytest.raises(CatalogError):
        load_catalog(path)


def test_load_catalog_env_override(catalog, tmp_path, monkeypatch):
    target = tmp_path / "catalog.txt"
    target.write_text(emit_catalog(catalog), encoding="ascii")
    monkeypatch.setenv("COLINE_CATALOG", str(target))
    loaded = load_catalog()
    assert len(loaded.toughness_exceptions) == 18

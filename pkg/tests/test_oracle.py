import random
from itertools import combinations, permutations

import pytest

from coline.graphcore import Graph, add_dominating_vertex, build_named, coline, components
from coline.oracle import (
    CycleOrPath,
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
    is_valid_in,
    longest_cycle,
    vertex_connectivity,
)


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Reference check: try every vertex permutation."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    n = g1.n
    for perm in permutations(range(n)):
        if all(
            g1.has_edge(u, v) == g2.has_edge(perm[u], perm[v])
            for u in range(n)
            for v in range(u + 1, n)
        ):
            return True
    return False


def relabel(g: Graph, perm) -> Graph:
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# --- Hamiltonian search -------------------------------------------------------

def test_hamiltonian_cycle_examples():
    petersen_like, _ = coline(build_named("K5"))
    assert hamiltonian_cycle(petersen_like) is None
    c5 = build_named("C5")
    cycle = hamiltonian_cycle(c5)
    assert cycle is not None and len(cycle) == 5
    prism, _ = coline(build_named("C6"))
    assert hamiltonian_cycle(prism) is not None


def test_hamiltonian_cycle_needs_three_vertices():
    assert hamiltonian_cycle(Graph(2, (2, 1))) is None
    assert hamiltonian_cycle(Graph(1, (0,))) is None
    assert hamiltonian_cycle(Graph(0, ())) is None


def test_hamiltonian_path_examples():
    petersen_like, _ = coline(build_named("K5"))
    path = hamiltonian_path(petersen_like)
    assert path is not None and len(path) == 10
    assert hamiltonian_path(Graph(2, (0, 0))) is None
    corona_coline, _ = coline(build_named("K3_circ_K1"))
    assert hamiltonian_path(corona_coline) is None
    assert hamiltonian_path(Graph(1, (0,))) is not None


def test_returned_walks_are_valid(classes_up_to_6):
    for g in classes_up_to_6:
        cycle = hamiltonian_cycle(g)
        if cycle is not None:
            assert cycle.closed and len(cycle) == g.n and is_valid_in(cycle, g)
        path = hamiltonian_path(g)
        if path is not None:
            assert not path.closed and len(path) == g.n and is_valid_in(path, g)


def test_longest_cycle_examples():
    assert len(longest_cycle(build_named("Petersen"))) == 9
    assert longest_cycle(build_named("P5")) is None
    h3_coline, _ = coline(build_named("H3"))
    assert h3_coline.n == 7
    assert hamiltonian_cycle(h3_coline) is None
    assert len(longest_cycle(h3_coline)) == 6


def test_longest_cycle_matches_hamiltonicity(classes_up_to_6):
    for g in classes_up_to_6:
        if g.n > 6:
            continue
        best = longest_cycle(g)
        ham = hamiltonian_cycle(g)
        if ham is not None:
            assert best is not None and len(best) == g.n
        elif best is not None:
            assert len(best) < g.n
            assert is_valid_in(best, g)


def test_longest_cycle_deterministic():
    prism, _ = coline(build_named("C6"))
    assert longest_cycle(prism) == longest_cycle(prism)


# --- toughness and connectivity -------------------------------------------------

def test_is_tough_examples():
    star = is_tough(build_named("K1_3"))
    assert not star.value
    assert star.witness.components_after == 3 and len(star.witness.cutset) == 1
    h1_coline, _ = coline(build_named("H1"))
    assert is_tough(h1_coline).value
    bad, _ = coline(build_named("C4+K2"))
    assert not is_tough(bad).value


def test_tough_witness_recomputes(classes_up_to_6):
    for g in classes_up_to_6:
        result = is_tough(g)
        if result.witness is None:
            continue
        cut = 0
        for v in result.witness.cutset:
            cut |= 1 << v
        remaining = (1 << g.n) - 1 & ~cut
        count = len(components(g, within=remaining))
        assert count == result.witness.components_after
        assert count > len(result.witness.cutset)


def test_complete_graphs_vacuously_tough():
    for n in (1, 2, 4):
        result = is_tough(build_named(f"K{n}"))
        assert result.value and result.vacuous


def test_tough_implies_two_connected(classes_sweep_range):
    for g in classes_sweep_range[:400]:
        l, _ = coline(g)
        if l.n < 3:
            continue
        result = is_tough(l)
        complete = l.m == l.n * (l.n - 1) // 2
        if result.value and not complete:
            assert vertex_connectivity(l) >= 2


def test_vertex_connectivity_examples():
    assert vertex_connectivity(build_named("Petersen")) == 3
    assert vertex_connectivity(build_named("K5")) == 4
    assert vertex_connectivity(build_named("C4+K2")) == 0
    assert vertex_connectivity(build_named("P4")) == 1


# --- isomorphism and canonical forms ---------------------------------------------

def test_isomorphism_examples():
    assert is_isomorphic(coline(build_named("K5"))[0], build_named("Petersen"))
    assert is_isomorphic(build_named("K3"), build_named("K1_3")) is None
    from coline.graphcore import line_graph

    assert is_isomorphic(line_graph(build_named("K3"))[0], line_graph(build_named("K1_3"))[0])


def test_certificate_is_a_real_isomorphism():
    g1 = build_named("Petersen")
    perm = list(range(10))
    random.Random(7).shuffle(perm)
    g2 = relabel(g1, perm)
    cert = is_isomorphic(g1, g2)
    assert cert is not None
    mapping = cert.mapping
    assert sorted(mapping) == list(range(10))
    for u in range(10):
        for v in range(u + 1, 10):
            assert g1.has_edge(u, v) == g2.has_edge(mapping[u], mapping[v])


def test_canonical_form_examples():
    c5 = build_named("C5")
    assert canonical_form(c5) == canonical_form(coline(c5)[0])
    assert canonical_form(build_named("K3")) != canonical_form(build_named("K1_3"))
    forms = {
        canonical_form(relabel(c5, perm)) for perm in permutations(range(5))
    }
    assert len(forms) == 1


def test_canonical_form_agrees_with_permutation_oracle():
    small = [g for g in _classes(5) if g.n <= 5]
    buckets = {}
    for g in small:
        buckets.setdefault((g.n, g.m), []).append(g)
    for group in buckets.values():
        for g1, g2 in combinations(group, 2):
            brute = brute_isomorphic(g1, g2)
            assert (canonical_form(g1) == canonical_form(g2)) == brute
            assert (is_isomorphic(g1, g2) is not None) == brute
        for g in group:
            assert brute_isomorphic(g, canonical_graph(g))


def _classes(max_vertices):
    from coline.sweep import enumerate_classes

    return list(enumerate_classes(max_vertices, max_vertices * (max_vertices - 1) // 2))


def test_canonical_form_invariant_under_relabeling(classes_sweep_range):
    rng = random.Random(11)
    sample = rng.sample(classes_sweep_range, 60)
    for g in sample:
        perm = list(range(g.n))
        rng.shuffle(perm)
        shuffled = relabel(g, perm)
        assert canonical_form(shuffled) == canonical_form(g)
        assert is_isomorphic(shuffled, g) is not None


# --- containment -----------------------------------------------------------------

def test_contains_subgraph_examples():
    assert contains_subgraph(build_named("K4"), build_named("K3"))
    assert contains_subgraph(build_named("H2"), build_named("K3_circ_K1"))
    assert not contains_subgraph(build_named("H1"), build_named("K4_minus"))
    assert not contains_subgraph(build_named("H1"), build_named("F4"))


def test_is_induced_free_examples():
    pattern = build_named("K2+3K1")
    assert is_induced_free(coline(build_named("K5"))[0], pattern)
    assert not is_induced_free(pattern, pattern)
    # non-induced containment differs from induced on purpose
    assert contains_subgraph(build_named("K5"), build_named("C4"))
    assert is_induced_free(build_named("K5"), build_named("C4"))


# --- powers of a Hamiltonian cycle and cms ------------------------------------------

def test_contains_power_ham_cycle():
    assert contains_power_ham_cycle(build_named("K5"), 2)
    assert not contains_power_ham_cycle(build_named("Petersen"), 1)
    prism, _ = coline(build_named("C6"))
    assert contains_power_ham_cycle(prism, 1)
    assert contains_power_ham_cycle(prism, 0)
    assert not contains_power_ham_cycle(Graph(2, (2, 1)), 1)


def test_power_one_matches_hamiltonicity(classes_up_to_6):
    for g in classes_up_to_6[:120]:
        assert contains_power_ham_cycle(g, 1) == (hamiltonian_cycle(g) is not None)


def test_cms_exact():
    assert cms_exact(build_named("K5")) == 1
    assert cms_exact(build_named("C6")) >= 2
    assert cms_exact(build_named("K2")) == 1
    # a perfect matching has a complete coline graph, so every window works
    assert cms_exact(build_named("5K2")) == 5
    with pytest.raises(ValueError):
        cms_exact(Graph(3, (0, 0, 0)))


# --- roots ---------------------------------------------------------------------------

def test_find_roots_whitney_pair():
    result = find_roots(Graph(3, (0, 0, 0)))
    names = {canonical_form(g) for g in result.roots}
    assert names == {canonical_form(build_named("K3")), canonical_form(build_named("K1_3"))}
    assert result.complete


def test_find_roots_c5():
    result = find_roots(build_named("C5"))
    assert [canonical_form(g) for g in result.roots] == [canonical_form(build_named("C5"))]
    assert not result.complete  # roots on up to 10 vertices are conceivable


def test_find_roots_budget():
    with pytest.raises(ValueError):
        find_roots(build_named("C5"), max_vertices=9)


def test_find_roots_petersen():
    result = find_roots(build_named("Petersen"))
    assert [canonical_form(g) for g in result.roots] == [canonical_form(build_named("K5"))]
    assert not result.complete  # 9..20-vertex roots are beyond the budget

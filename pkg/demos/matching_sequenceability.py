"""Cyclic matching sequenceability through the coline lens.

cms(G) is the largest k such that the edges of G can be arranged in a
cyclic order where every k consecutive edges form a matching.  That holds
exactly when co(G) contains the (k-1)-th power of a Hamiltonian cycle, so
cms(G) >= 2 is the same question as "is co(G) Hamiltonian?".
"""

from coline import build_named, cms_exact, coline, hamiltonian_cycle
from coline.characterize import decide_coline_hamiltonian, load_catalog

catalog = load_catalog()

for name in ("K5", "C6", "C5", "K3_circ_K1", "5K2", "P4", "K4"):
    g = build_named(name)
    value = cms_exact(g)
    l, _ = coline(g)
    ham = hamiltonian_cycle(l) is not None
    try:
        decided = decide_coline_hamiltonian(g, catalog).value
        agree = (value >= 2) == decided == ham
    except Exception:
        decided = None
        agree = (value >= 2) == ham
    print(f"{name:12s} m={g.m:2d}  cms={value}  coline Hamiltonian={ham}  consistent={agree}")

print()
print("a perfect matching is the extreme case: all edges are pairwise")
print("disjoint, its coline graph is complete, and cms equals m:")
print(f"  cms(5K2) = {cms_exact(build_named('5K2'))}")

"""Classify a handful of graphs and confirm every verdict with the oracle.

The decision procedures answer in polynomial time from edge counts, a few
subgraph tests and catalog membership; with verify on, the exponential
searches recompute each verdict from scratch.
"""

from coline import build_named
from coline.characterize import build_report, load_catalog

catalog = load_catalog()

for name in ("K5", "H1", "H3", "C6", "K3_circ_K1", "C4+K2", "K1_4", "F4"):
    g = build_named(name)
    report = build_report(g, catalog, verify=True)
    agree = all(entry["agrees"] for entry in report.oracle_confirmed.values())
    print(f"{name:12s} m={report.m:2d} max_deg={report.max_degree}")
    print(f"  tough:       {report.tough.value}  clause={report.tough.clause}")
    print(f"  hamiltonian: {report.hamiltonian.value}  clause={report.hamiltonian.clause}"
          f"  (five-clause: {report.wu_meng.clause})")
    print(f"  traceable:   {report.traceable.value}  clause={report.traceable.clause}")
    print(f"  oracle agrees on all three: {agree}")

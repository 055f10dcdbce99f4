"""Run the exhaustive cross-verification sweep at full acceptance scale.

Every isomorphism class without isolated vertices on at most 8 vertices
with at most 10 edges is decided twice (characterisation vs oracle); the
censuses must land exactly on 4 / 18 / 9 / 21.
"""

import time

from coline.characterize import load_catalog
from coline.sweep import SweepConfig, expected_census, run_sweep

catalog = load_catalog()
config = SweepConfig(max_vertices=8, max_edges=10, worker_count=2)
start = time.perf_counter()
report = run_sweep(config, catalog)
elapsed = time.perf_counter() - start

print(f"classes scanned: {report.graphs_scanned} in {elapsed:.1f}s "
      f"({config.worker_count} workers)")
print(f"mismatches: {len(report.mismatches)}")
expected = expected_census(catalog, config.max_vertices, config.max_edges)
for key in sorted(expected):
    got = report.exception_census.get(key, frozenset())
    status = "ok" if got == expected[key] else "MISMATCH"
    print(f"  {key}: {len(got)} ({status})")
for key in ("self-coline", "whitney-pairs"):
    print(f"  {key}: {len(report.exception_census[key])}")

"""Sweep every irreducible of a simple algebra up to a rank and dimension cap.

Each (representation, k) pair is either exhibited as Lagrangian by a witness
plane or ruled out with a reason. The second half scans products of rank-one
and rank-two algebras acting by the outer tensor product.

    python demos/04_classification_sweep.py [rank_cap]
"""

import sys
from collections import Counter

from lagorbits import case_analyses, run_classification, scan_products
from lagorbits.classify import default_jobs

rank_cap = int(sys.argv[1]) if len(sys.argv) > 1 else 4
records = run_classification(rank_cap=rank_cap, k_cap=8, dim_cap=64, jobs=default_jobs())

print(f"simple algebras up to rank {rank_cap}: {len(records)} (representation, k) pairs")
print(Counter(r.reason or "lagrangian" for r in records).most_common())
print()
for r in records:
    if r.lagrangian:
        row = f"  [{r.table1[0]}]" if r.table1 else ""
        print(f"  {r.spec.label():18} n={r.n:3} k={r.k}  {r.fs_type}{row}")

print()
for r in scan_products(factor_cap=3, dim_cap=64, rank_cap=2, jobs=default_jobs()):
    if r.lagrangian:
        print(f"  product {r.spec.label()} n={r.n} k={r.k}")

print()
for name, value in case_analyses().items():
    print(f"  {name:36} {value}")

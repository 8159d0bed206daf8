"""Reproduce the family tables of candidate representations.

A k-plane orbit can only be Lagrangian when k(n - k) <= dim G - rank G. For
k >= 2 and k >= 3 that caps n, and the irreducibles meeting the cap fold into
one row per family. The rendered tables are compared with the golden files
shipped in the package.

    python demos/03_candidate_tables.py
"""

from lagorbits.tables import compare_with_golden

for k_floor in (2, 3):
    matches, rendered, diff = compare_with_golden(k_floor)
    print(rendered)
    print("golden file:", "match" if matches else "DIFFERS")
    if diff:
        print(diff)
    print()

"""Root systems, weight systems and representation types.

Builds a few root systems, prints their sizes, then computes weight
multiplicities and Frobenius-Schur types for some small irreducibles.

    python demos/01_roots_and_weights.py
"""

from lagorbits import (
    IrrepSpec,
    build_root_system,
    frobenius_schur_type,
    weight_system,
    weyl_dimension,
)
from lagorbits.rootsys import format_weight

for label in ["A3", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"]:
    rs = build_root_system(label)
    print(f"{label:3}  rank={rs.rank}  roots={len(rs.roots):3}  dim={rs.dim}")

print()
# the 5-dimensional representation of so(5) has a zero weight, the spin
# representation does not
for coords in [(1, 0), (0, 1), (0, 2)]:
    spec = IrrepSpec.of("B2", coords)
    ws = weight_system(spec)
    print(f"{spec.label():10} dim={weyl_dimension(spec):2}  type={frobenius_schur_type(spec)}")
    for w, m in sorted(ws.entries.items(), reverse=True):
        print(f"    {format_weight(w):12} x{m}")

print()
for label, coords in [("E6", (1, 0, 0, 0, 0, 0)), ("E7", (1, 0, 0, 0, 0, 0, 0)),
                      ("F4", (0, 0, 0, 1)), ("G2", (1, 0))]:
    spec = IrrepSpec.of(label, coords)
    ws = weight_system(spec)
    print(f"{spec.label():22} dim={ws.dim:3}  distinct weights={len(ws.entries):3}  "
          f"type={frobenius_schur_type(spec)}")

"""Torus-invariant planes and the Lagrangian test.

For a representation V and a plane size k, the candidate planes are sums of
weight spaces over a set Q of weights. Q must be a union of components of the
graph joining weights whose difference is not a root, its weights must sum to
zero, and the orbit through the plane must have dimension k(n - k).

    python demos/02_lagrangian_check.py
"""

from lagorbits import (
    IrrepSpec,
    find_Q_candidates,
    is_lagrangian,
    isotropic_weyl_orbit_plane,
    nonroot_difference_components,
    weight_system,
)
from lagorbits.rootsys import format_weight


def show(label, coords, k):
    spec = IrrepSpec.of(label, coords)
    ws = weight_system(spec)
    comps = nonroot_difference_components(ws, spec.rs)
    print(f"{spec.label()}  n={ws.dim}  k={k}  components={len(comps)}")
    cands = find_Q_candidates(spec, k)
    if not cands:
        print("    no zero-sum union of components")
    for c in cands:
        Q = ", ".join(format_weight(w) for w in c.sorted_Q())
        print(f"    Q={{{Q}}}  orbit_dim={c.orbit_dim}/{c.target_dim}  lagrangian={c.lagrangian}")
    print()


# so(5) on C^5: the planes spanned by e1, -e1 (or e2, -e2) are Lagrangian
show("B2", (1, 0), 2)
# sp(3) on C^6 at k = 3: every weight is its own component and no three sum to zero
show("C3", (1, 0, 0), 3)
# su(4) on Lambda^2 C^4 = so(6) on C^6
show("A3", (0, 1, 0), 2)
# the half-spin representation of so(10) has no zero-sum 3-plane
show("D5", (0, 0, 0, 0, 1), 3)

# an explicit Q can also be tested directly
spec = IrrepSpec.of("G2", (1, 0))
ok, cand = is_lagrangian(spec, [(0, 0, 0)])
print(f"G2 zero weight line: lagrangian={ok}  orbit_dim={cand.orbit_dim}/{cand.target_dim}")

# the complement of the short-root Weyl orbit of G2 is the zero weight line again
plane = isotropic_weyl_orbit_plane(spec, spec.highest_weight)
print(f"G2 orbit plane: k={plane.k}  complemented={plane.complemented}  "
      f"lagrangian={plane.lagrangian}")

"""Numerical check that Lagrangian planes are isotropic for the moment map.

A plane spanned by weight vectors whose weights sum to zero has vanishing
moment map. The group moves it along its orbit, and the moment map is
equivariant, so it stays zero. A random plane is not isotropic, and neither
is the su(4) plane of the last row, whose two weights do not cancel.

    python demos/05_moment_map.py
"""

import numpy as np

from lagorbits.momentmap import (
    act,
    build_realization,
    group_element,
    isotropy_check,
    parse_weight_list,
    plane_from_weights,
    random_plane,
)

rng = np.random.default_rng(7)

for family, size, text in [("so", 5, "e1,-e1"), ("so", 7, "e1,-e1,0"),
                           ("sp", 2, "e1,-e1"), ("su", 4, "e1,e2")]:
    real = build_realization(family, size)
    plane = plane_from_weights(real, parse_weight_list(real, text))
    base = isotropy_check(real, plane)
    # a random group element: exponentiate a random combination of generators
    x = sum(rng.standard_normal() * g.matrix for g in real.generators)
    moved = isotropy_check(real, act(group_element(x, 1.0), plane))
    rand = isotropy_check(real, random_plane(real, plane.k, rng))
    print(f"{family}({size}) Q={text:10} |mu|={base['max_abs_moment']:.1e}  "
          f"after g: {moved['max_abs_moment']:.1e}  random plane: {rand['max_abs_moment']:.2f}")

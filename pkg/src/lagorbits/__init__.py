"""Homogeneous Lagrangian orbits in complex Grassmannians.

Exact root-system and weight-system machinery, the torus-invariant plane
criterion, classification sweeps, and a numerical moment-map oracle.
"""

from .rootsys import RootSystem, build_root_system, dominant_representative, is_root, weyl_orbit
from .repdata import IrrepSpec, WeightSystem, frobenius_schur_type, weight_system, weyl_dimension
from .lagcrit import (
    PlaneCandidate,
    evaluate_plane,
    find_Q_candidates,
    is_lagrangian,
    isotropic_weyl_orbit_plane,
    nonroot_difference_components,
    orbit_dimension,
)
from .classify import (
    ClassificationRecord,
    case_analyses,
    enumerate_candidates,
    run_classification,
    scan_products,
)

__version__ = "0.1.0"

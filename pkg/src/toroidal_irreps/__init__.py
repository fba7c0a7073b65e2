"""Exact computations for toroidal Lie algebras and their integrable modules."""

from .affine import AffineWeight, build_irreducible, freudenthal_affine, freudenthal_table
from .garland import evaluate_under_pi, garland_p, transport, verify_garland_on_module
from .lattice import Lattice, gcd_unimodular, hnf, quotient_reps
from .pimod import (
    PiFunction,
    build_L,
    central_triviality_check,
    compute_G_pi,
    decompose,
    highest_vectors,
    iso_check,
    iso_check_evaluation,
    phi_pi,
)
from .rootsys import build_root_system
from .toroidal import ToroidalAlgebra, ToroidalElement, ToroidalRoot, ToroidalWeight, reduce_central

__all__ = [
    "AffineWeight",
    "Lattice",
    "PiFunction",
    "ToroidalAlgebra",
    "ToroidalElement",
    "ToroidalRoot",
    "ToroidalWeight",
    "build_L",
    "build_irreducible",
    "build_root_system",
    "central_triviality_check",
    "compute_G_pi",
    "decompose",
    "evaluate_under_pi",
    "freudenthal_affine",
    "freudenthal_table",
    "garland_p",
    "gcd_unimodular",
    "highest_vectors",
    "hnf",
    "iso_check",
    "iso_check_evaluation",
    "phi_pi",
    "quotient_reps",
    "reduce_central",
    "transport",
    "verify_garland_on_module",
]

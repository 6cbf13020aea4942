"""Oriented matroid duality as Alexander duality, in exact arithmetic."""

from .exact import RationalMatrix, det, kernel_basis, rank, smith_normal_form
from .om import (
    Chirotope,
    OrientedMatroid,
    Painting,
    SignVector,
    chirotope_from_matrix,
    circuits,
    cocircuits,
    compose,
    covectors,
    dual,
    four_painting_witness,
    minor,
    reorient,
    structural_flags,
)
from .sc import (
    HomologyProfile,
    SimplicialComplex,
    alexander_dual,
    alexander_duality_check,
    complex_from_facets,
    minimal_nonfaces,
    reduced_cohomology,
    reduced_homology,
    stanley_reisner,
)
from .lawrence import (
    AffineOM,
    FamilyFlags,
    cells_are_simplices,
    classify_families,
    delta_complex,
    dual_affine,
    facet_count_check,
    full_simplices,
    is_triangulation,
    lawrence_matrix,
    lawrence_om,
    lifting_subdivision,
    sphere_ball_check,
    theorem1_check,
)

__version__ = "0.1.0"

"""deltak: exact delta-matroid invariants by torus-fixed-point localization."""

from .dmat import (DeltaMatroid, GroundMatrix, enumerate_all, from_graph,
                   from_matrix, interlace, lattice_distance, minimal_feasible,
                   validate_family)
from .engine import (chi_transfer_check, euler_char_HRR, euler_char_X,
                     euler_char_ogr, interlace_via_integral, r_poly_orbit,
                     r_poly_y)
from .classes import (k_polytope, k_wedge_qdual, ogr_orbit_class, ogr_y_class,
                      w_act)
from .ample import is_normal_bounded, is_very_ample
from .fan import SignedPermutation, enumerate_W, gkm_check
from .laurent import LaurentPoly, TruncSeries, UniPoly, interpolate

__version__ = "0.1.0"

__all__ = [
    "DeltaMatroid", "GroundMatrix", "LaurentPoly", "SignedPermutation",
    "TruncSeries", "UniPoly", "chi_transfer_check", "enumerate_W",
    "enumerate_all", "euler_char_HRR", "euler_char_X", "euler_char_ogr",
    "from_graph", "from_matrix", "gkm_check", "interlace",
    "interlace_via_integral", "interpolate", "is_normal_bounded",
    "is_very_ample", "k_polytope", "k_wedge_qdual", "lattice_distance",
    "minimal_feasible", "ogr_orbit_class", "ogr_y_class", "r_poly_orbit",
    "r_poly_y", "validate_family", "w_act",
]

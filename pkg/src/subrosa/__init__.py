"""Quasiperiodic rhombic substitution tilings with 2n-fold rotational symmetry.

Exact arithmetic over the cyclotomic integers, edge sequences, roses,
boundary words with a rewriting verifier, a constructive tiler, the
substitution itself, validators, and JSON/SVG output.
"""

__version__ = "0.1.0"

from .boundary import BoundaryWord, canonical_matching, project, super_boundary
from .cyclo import CycloVector
from .edges import alpha, format_sigma, sigma
from .geometry import PlacedRhombus, scaling_factor
from .patch import Patch
from .rewrite import crossing_condition, reduce_to_empty
from .rose import rose_R1, rose_R2
from .substitution import Generation, SubstitutionRule, iterate_from_rose, primitivity_check, substitute
from .tiler import super_rhombus_patch, tile_region, tile_region_symmetric
from .validation import validate_patch

__all__ = [
    "BoundaryWord",
    "CycloVector",
    "Generation",
    "Patch",
    "PlacedRhombus",
    "SubstitutionRule",
    "alpha",
    "canonical_matching",
    "crossing_condition",
    "format_sigma",
    "iterate_from_rose",
    "primitivity_check",
    "project",
    "reduce_to_empty",
    "rose_R1",
    "rose_R2",
    "scaling_factor",
    "sigma",
    "substitute",
    "super_boundary",
    "super_rhombus_patch",
    "tile_region",
    "tile_region_symmetric",
    "validate_patch",
]

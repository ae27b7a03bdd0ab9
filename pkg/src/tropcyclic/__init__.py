"""Extreme rays of polars of signed cyclic tropical cones, counted by lattice paths."""

from .bounds import (
    alternating_pattern,
    attained_pattern,
    checkerboard_pattern,
    mcmullen_U,
    natural_pattern,
    trop_upper_bound,
)
from .cone import TropicalIneqSystem, is_extreme, member, saturated_rows, tangent_cone
from .cyclic import SignedCyclicSpec, build_polar, enumerate_extreme_rays, oracle_extreme_rays, path_to_ray
from .errors import GuardError
from .linalg import IndexPair, cramer_solution, sdet, tper
from .paths import (
    LatticePath,
    count_allowed_paths,
    count_tropical_paths,
    enumerate_allowed_paths,
    enumerate_tropical_paths,
    gale_to_path,
    is_allowed,
    is_tropically_allowed,
    path_to_gale,
)
from .patterns import SignPattern, parse_pattern
from .search import emit_table, max_ntrop
from .semiring import BOT, SignedScalar

__version__ = "0.1.0"

__all__ = [
    "alternating_pattern",
    "attained_pattern",
    "BOT",
    "build_polar",
    "checkerboard_pattern",
    "count_allowed_paths",
    "count_tropical_paths",
    "cramer_solution",
    "emit_table",
    "enumerate_allowed_paths",
    "enumerate_extreme_rays",
    "enumerate_tropical_paths",
    "gale_to_path",
    "GuardError",
    "IndexPair",
    "is_allowed",
    "is_extreme",
    "is_tropically_allowed",
    "LatticePath",
    "max_ntrop",
    "mcmullen_U",
    "member",
    "natural_pattern",
    "oracle_extreme_rays",
    "parse_pattern",
    "path_to_gale",
    "path_to_ray",
    "saturated_rows",
    "sdet",
    "SignedCyclicSpec",
    "SignedScalar",
    "SignPattern",
    "tangent_cone",
    "tper",
    "trop_upper_bound",
    "TropicalIneqSystem",
]

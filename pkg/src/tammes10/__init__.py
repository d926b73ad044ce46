"""Sequential covering construction and exact radius for ten-cap Tammes packing."""

from .construction import Configuration, PlacementTrace, build_configuration
from .solver import RootResult, closed_form_r10, find_root, residual
from .sphgeom import SphericalCap, UnitVector, angular_distance, circle_intersection
from .verify import VerificationReport, verify_configuration

__all__ = [
    "Configuration",
    "PlacementTrace",
    "RootResult",
    "SphericalCap",
    "UnitVector",
    "VerificationReport",
    "angular_distance",
    "build_configuration",
    "circle_intersection",
    "closed_form_r10",
    "find_root",
    "residual",
    "verify_configuration",
]

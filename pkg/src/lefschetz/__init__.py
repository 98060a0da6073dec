"""Exact homological engine for Lefschetz pencils given as positive
Dehn-twist factorizations."""

from .errors import (CertificateError, DimensionError, InvariantBreach, LefschetzError,
                     PreconditionError, SurfaceMismatch)
from .homlin import AbelianGroup, IntMatrix, cokernel_structure
from .surface import HomologyClass, Surface
from .curves import CurveClass, MappingWord, Partition
from .factorization import PositiveFactorization, homological_boundary_check
from .pencil import LefschetzPencil, identify_manifold, pencil_report

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup", "CertificateError", "CurveClass", "DimensionError", "HomologyClass",
    "IntMatrix", "InvariantBreach", "LefschetzError", "LefschetzPencil", "MappingWord",
    "Partition", "PositiveFactorization", "PreconditionError", "Surface", "SurfaceMismatch",
    "cokernel_structure", "homological_boundary_check", "identify_manifold", "pencil_report",
]

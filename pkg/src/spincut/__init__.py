"""Spin^c prequantization of the plane, the two-sphere and CP^n, and cutting."""

from . import clifford, cutting, forms, models, spin
from .clifford import Multivector, blade, blade_mul
from .errors import SpinCError
from .report import Check, Report

__version__ = "0.1.0"

__all__ = ["clifford", "spin", "forms", "models", "cutting", "Multivector", "blade", "blade_mul",
           "SpinCError", "Check", "Report", "__version__"]

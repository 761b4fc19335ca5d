"""Exact computations with SL_k-frieze patterns."""
from .arith import ExactMatrix, QuadNumber, det_exact, det_rows
from .classify import classify, dual, is_generic, is_tame, verify_slk
from .frieze import FriezePattern, periodic, window_pattern
from .xi import XiSequence, extract_xi, reconstruct

__version__ = "0.1.0"

__all__ = [
    "ExactMatrix", "QuadNumber", "det_exact", "det_rows",
    "classify", "dual", "is_generic", "is_tame", "verify_slk",
    "FriezePattern", "periodic", "window_pattern",
    "XiSequence", "extract_xi", "reconstruct",
]

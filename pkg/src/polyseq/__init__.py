"""Exact computation and verification toolkit for the integer polynomial sequence A174531."""
from .exact import NonZeroRemainder, Poly
from .pseq import PSequence, l_poly, p_sequence, p_step

__all__ = ["NonZeroRemainder", "PSequence", "Poly", "l_poly", "p_sequence", "p_step"]
__version__ = "0.1.0"

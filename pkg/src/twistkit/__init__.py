"""Exact calculator for torus mapping classes, plumbings, Seifert data and toric layers."""

__version__ = "0.1.0"

from .linalg import AbelianGroup, Inertia, IntMatrix, cokernel_invariants, det_exact, inertia, smith_normal_form
from .mcg import SL2, Slope, TwistWord, eval_word, twist_matrix
from .wordparse import parse_word

__all__ = [
    "AbelianGroup", "Inertia", "IntMatrix", "SL2", "Slope", "TwistWord",
    "cokernel_invariants", "det_exact", "eval_word", "inertia", "parse_word",
    "smith_normal_form", "twist_matrix",
]

"""Exact Kazhdan-Lusztig and inverse Kazhdan-Lusztig polynomials of matroids."""

from ._kernels import BACKEND
from .analysis import Analysis, check_theorem, classify, is_degenerate, scan
from .corpus import builtin_corpus
from .kls import (
    KLSMemo,
    char_from_tutte,
    inverse_kl_polynomial,
    inverse_kl_via_convolution,
    kl_polynomial,
    q_constant_term,
    q_linear_coefficient,
    tutte_polynomial,
)
from .lattice import FlatLattice, WhitneyTable, lattice_of_flats, whitney_table
from .matroid import (
    Matroid,
    are_isomorphic,
    boolean,
    contract,
    delete,
    direct_sum,
    fano,
    fano_dual,
    has_minor,
    is_connected,
    is_regular,
    matroid_from_bases,
    matroid_from_matrix,
    minor,
    simplify,
    uniform,
)
from .named import build_named
from .poly import IntPoly, IntPoly2

__version__ = "0.1.0"

__all__ = [
    "Analysis",
    "BACKEND",
    "FlatLattice",
    "IntPoly",
    "IntPoly2",
    "KLSMemo",
    "Matroid",
    "WhitneyTable",
    "are_isomorphic",
    "boolean",
    "build_named",
    "builtin_corpus",
    "char_from_tutte",
    "check_theorem",
    "classify",
    "contract",
    "delete",
    "direct_sum",
    "fano",
    "fano_dual",
    "has_minor",
    "inverse_kl_polynomial",
    "inverse_kl_via_convolution",
    "is_connected",
    "is_degenerate",
    "is_regular",
    "kl_polynomial",
    "lattice_of_flats",
    "matroid_from_bases",
    "matroid_from_matrix",
    "minor",
    "q_constant_term",
    "q_linear_coefficient",
    "scan",
    "simplify",
    "tutte_polynomial",
    "uniform",
    "whitney_table",
]

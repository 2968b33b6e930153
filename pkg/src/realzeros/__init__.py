"""Exact real-rootedness, interlacing and sequence diagnostics for rational polynomials."""

from .poly import ONE, X, ZERO, Poly, gcd, parse, reflect_standardize, squarefree_decomposition, squarefree_part
from .roots import (
    RootInterval,
    RootIsolation,
    count_real_roots,
    is_pf,
    is_real_rooted,
    isolate_real_roots,
    refine_root,
    sign_at_root,
    sturm_chain,
)
from .interlace import (
    InterlacingCertificate,
    compare_zero_orders,
    is_generalized_sturm_sequence,
    is_sturm_sequence,
    prec,
    preceq,
)
from .report import CheckReport, Clause

__version__ = "0.1.0"

__all__ = [
    "Poly", "parse", "gcd", "squarefree_decomposition", "squarefree_part", "reflect_standardize",
    "ZERO", "ONE", "X",
    "RootInterval", "RootIsolation", "sturm_chain", "count_real_roots", "isolate_real_roots",
    "refine_root", "sign_at_root", "is_real_rooted", "is_pf",
    "InterlacingCertificate", "compare_zero_orders", "preceq", "prec",
    "is_sturm_sequence", "is_generalized_sturm_sequence",
    "CheckReport", "Clause",
]

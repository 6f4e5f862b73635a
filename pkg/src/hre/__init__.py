"""Mod-2 obstruction calculus for k-regular maps and l-skew embeddings of R^d."""
from __future__ import annotations

from .bounds import (
    BoundReport,
    ls_category_bound,
    paper_table,
    regular_bound,
    regular_skew_bound,
    skew_bound,
)
from .charclass import (
    Certificate,
    Verdict,
    certify_regular,
    certify_regular_skew,
    certify_skew,
    chisholm_coefficient_audit,
    dual_class,
)
from .cohmodel import QuotientModel, detect_pure_power, reduce, vanishes
from .dickson import dickson_invariants, verify_gl_invariance
from .dyadic import alpha, binom_mod2, dyadic_profile, gamma, gamma2, multinom_mod2
from .gf2poly import Gf2Poly, Monomial, TermLimitError, invert_series, mul_truncated
from .regcheck import MapFamily, RandomSampler, GridSampler, check_affinely_regular, check_k_regular

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "Certificate",
    "Gf2Poly",
    "GridSampler",
    "MapFamily",
    "Monomial",
    "QuotientModel",
    "RandomSampler",
    "TermLimitError",
    "Verdict",
    "alpha",
    "binom_mod2",
    "certify_regular",
    "certify_regular_skew",
    "certify_skew",
    "check_affinely_regular",
    "check_k_regular",
    "chisholm_coefficient_audit",
    "detect_pure_power",
    "dickson_invariants",
    "dual_class",
    "dyadic_profile",
    "gamma",
    "gamma2",
    "invert_series",
    "ls_category_bound",
    "mul_truncated",
    "multinom_mod2",
    "paper_table",
    "reduce",
    "regular_bound",
    "regular_skew_bound",
    "skew_bound",
    "vanishes",
    "verify_gl_invariance",
]

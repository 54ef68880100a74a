"""Cauchy boundary operators, off-axis Cauchy integrals and closed-form transforms."""

from akns_rational.cauchy.boundary import (
    cauchy_minus,
    cauchy_offaxis,
    cauchy_offaxis_derivative,
    cauchy_plus,
    residue_expansion,
)
from akns_rational.cauchy.msigma import MsigmaProduct
from akns_rational.cauchy.transform import ft_of_expansion, hat_R, large_k_limit, large_k_limit_residues, pv_integral

__all__ = [
    "MsigmaProduct",
    "cauchy_minus",
    "cauchy_offaxis",
    "cauchy_offaxis_derivative",
    "cauchy_plus",
    "ft_of_expansion",
    "hat_R",
    "large_k_limit",
    "large_k_limit_residues",
    "pv_integral",
    "residue_expansion",
]

"""Derivative and multiplication operators, system assembly and finite sections."""

from akns_rational.operators.diff import diff_matrix, differentiate
from akns_rational.operators.finite_section import (
    DEFAULT_SECTION_CAP,
    SectionMode,
    SectionSolution,
    grow_section,
    parity_size,
    solve_finite_section,
    trailing_norm,
)
from akns_rational.operators.mult import BundleMatrix, bundle_product, mult_operator, multiply, row_times_matrix
from akns_rational.operators.systems import assemble_eigenproblem, assemble_fourier_ode, assemble_scattering_system

__all__ = [
    "DEFAULT_SECTION_CAP",
    "BundleMatrix",
    "SectionMode",
    "SectionSolution",
    "assemble_eigenproblem",
    "assemble_fourier_ode",
    "assemble_scattering_system",
    "bundle_product",
    "diff_matrix",
    "differentiate",
    "grow_section",
    "mult_operator",
    "multiply",
    "parity_size",
    "row_times_matrix",
    "solve_finite_section",
    "trailing_norm",
]

"""Scalars, FFT, special functions and the dense/Krylov solvers."""

from akns_rational.numeric_core.fft import dft, idft, is_power_of_two, next_power_of_two
from akns_rational.numeric_core.gmres import GMRESResult, GMRESStatus, gmres
from akns_rational.numeric_core.linalg import DenseMatrix, eig_dense, solve_least_squares, solve_square
from akns_rational.numeric_core.scalar import DOUBLE, Precision, Scalar
from akns_rational.numeric_core.special import clenshaw_laguerre, erfcx, laguerre_gl1

__all__ = [
    "DOUBLE",
    "DenseMatrix",
    "GMRESResult",
    "GMRESStatus",
    "Precision",
    "Scalar",
    "clenshaw_laguerre",
    "dft",
    "eig_dense",
    "erfcx",
    "gmres",
    "idft",
    "is_power_of_two",
    "laguerre_gl1",
    "next_power_of_two",
    "solve_least_squares",
    "solve_square",
]

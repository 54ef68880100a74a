"""Exceptions raised by the scattering and inverse scattering pipeline.

Argument problems are ``ValueError`` subclasses. Numerical failures are
``ArithmeticError`` subclasses and carry the parameter at which they happened.
"""

from __future__ import annotations


class PrecisionMismatchError(ValueError):
    """Two operands were built with different precisions or basis scales."""


class SideMismatchError(ValueError):
    """A left-data problem was requested at x < 0 or a right-data one at x > 0."""

    def __init__(self, side: str, x: float) -> None:
        super().__init__(f"{side} problem requires x {'>=' if side == 'left' else '<='} 0, got x={x}")
        self.side = side
        self.x = x


class InsufficientResolutionError(ValueError):
    """An expansion is not resolved to the requested tolerance."""

    def __init__(self, tail: float, tol: float) -> None:
        super().__init__(f"expansion tail {tail:.3e} exceeds tolerance {tol:.3e}")
        self.tail = tail
        self.tol = tol


class RankDeficientError(ArithmeticError):
    def __init__(self, rank: int, cols: int) -> None:
        super().__init__(f"least-squares matrix is rank deficient: rank {rank} < {cols} columns")
        self.rank = rank
        self.cols = cols


class EigenSolveError(ArithmeticError):
    """The dense eigenvalue iteration did not converge."""


class DeconvolutionError(ArithmeticError):
    def __init__(self, k: complex, value: complex) -> None:
        super().__init__(f"driver transform vanishes at k={k}: |g(k)|={abs(value):.3e}")
        self.k = k
        self.value = value


class SectionGrowthError(ArithmeticError):
    def __init__(self, cap: int, tail: float) -> None:
        super().__init__(f"finite section reached cap {cap} with trailing norm {tail:.3e}")
        self.cap = cap
        self.tail = tail


class SpectralSingularityError(ArithmeticError):
    def __init__(self, k: complex, which: str, value: complex) -> None:
        super().__init__(f"{which}(k) nearly vanishes at k={k}: |{which}|={abs(value):.3e}")
        self.k = k
        self.which = which
        self.value = value


class NormingConstantError(ArithmeticError):
    def __init__(self, z: complex, reason: str) -> None:
        super().__init__(f"cannot compute norming constant at z={z}: {reason}")
        self.z = z
        self.reason = reason


class PoleSystemError(ArithmeticError):
    def __init__(self, x: float) -> None:
        super().__init__(f"residue system is singular at x={x}")
        self.x = x


class BranchError(ArithmeticError):
    """log(1 - rho1*rho2) winds around zero on the real line."""

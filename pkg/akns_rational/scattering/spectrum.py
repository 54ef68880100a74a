"""Discrete spectrum: finite-section eigenvalues, Newton refinement and norming constants."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from akns_rational.basis.expansion import RationalExpansion
from akns_rational.cauchy.boundary import cauchy_offaxis, cauchy_offaxis_derivative
from akns_rational.errors import NormingConstantError
from akns_rational.numeric_core.linalg import eig_dense
from akns_rational.numeric_core.scalar import Scalar
from akns_rational.operators.systems import assemble_eigenproblem
from akns_rational.parallel import ordered_map
from akns_rational.scattering.forward import ScatteringProblem, solve_phi

LOGGER = logging.getLogger(__name__)

DEDUPLICATE_TOL = 1e-8
RATIO_TOL = 1e-6


@dataclass(frozen=True, slots=True)
class SpectrumConfig:
    """Eigenvalue search: ``size x size`` blocks, ``|Im z| > imag_cutoff``, Newton on ``a``/``A``."""

    nu: float = 1.0
    size: int = 128
    imag_cutoff: float = 1e-3
    newton_steps: int = 20
    newton_tol: float = 1e-12

    def __post_init__(self) -> None:
        self._validate()

    def _validate(self) -> None:
        if self.size < 32:
            raise ValueError(f"eigenproblem size must be >= 32, got {self.size}")
        if not self.imag_cutoff > 0:
            raise ValueError(f"imag_cutoff must be positive, got {self.imag_cutoff}")
        if self.newton_steps < 0:
            raise ValueError(f"newton_steps must be >= 0, got {self.newton_steps}")


@dataclass(frozen=True, slots=True)
class Eigenvalue:
    """A candidate zero of ``a`` (upper half plane) or ``A`` (lower)."""

    z: Scalar
    refined: bool
    residual: float
    initial: Scalar

    @property
    def upper(self) -> bool:
        return complex(self.z).imag > 0


@dataclass(frozen=True, slots=True)
class DiscreteDatum:
    """Eigenvalue with its proportionality constant and left/right norming constants.

    ``derivative`` is ``a'(z)`` for ``z`` above the axis and ``A'(z)`` below;
    ``c = b / derivative`` and ``d = -1 / (b * derivative)``.
    """

    z: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    derivative: Scalar

    def __post_init__(self) -> None:
        if complex(self.z).imag == 0:
            raise ValueError(f"discrete eigenvalues must be off the real axis, got {self.z}")

    @classmethod
    def from_b(cls, z: Any, b: Any, derivative: Any) -> DiscreteDatum:
        if b == 0 or derivative == 0:
            raise NormingConstantError(z, "vanishing proportionality constant or derivative")
        return cls(z, b, b / derivative, -1 / (b * derivative), derivative)


@dataclass(frozen=True, slots=True, eq=False)
class AnalyticPart:
    """``a = 1 + sum_{j>0} a_j R_{j,0}`` (``upper``) or ``A = 1 + sum_{j<0} A_j R_{j,0}``."""

    expansion: RationalExpansion
    upper: bool

    def __call__(self, z: Any) -> Scalar:
        sign = 1 if self.upper else -1
        return 1 + sign * cauchy_offaxis(self.expansion, z)

    def derivative(self, z: Any) -> Scalar:
        sign = 1 if self.upper else -1
        return sign * cauchy_offaxis_derivative(self.expansion, z)

    def split_defect(self) -> float:
        """Largest coefficient on the wrong side of the analyticity split."""
        wrong = self.expansion.neg if self.upper else self.expansion.pos
        return max((float(abs(c)) for c in wrong), default=0.0)


def finite_section_eigenvalues(problem: ScatteringProblem, config: SpectrumConfig) -> list[Scalar]:
    """Eigenvalues of the ``2n x 2n`` section with ``|Im z| > imag_cutoff``."""
    matrix = assemble_eigenproblem(problem.q, problem.r, config.size)
    values = eig_dense(matrix, problem.params.precision)
    kept = [z for z in values if abs(complex(z).imag) > config.imag_cutoff]
    LOGGER.debug("eigenproblem of size %d: %d of %d eigenvalues off the axis", 2 * config.size, len(kept), len(values))
    return kept


def newton_refine(f: AnalyticPart, z0: Any, steps: int = 20, tol: float = 1e-12) -> Eigenvalue:
    """Newton iteration on ``f`` from ``z0``, staying in ``z0``'s half plane.

    The result is ``refined`` when ``|f(z)| < tol`` or ``|f|`` dropped by a
    factor of at least 1e3.
    """
    z = z0
    start = float(abs(f(z)))
    value = start
    for step in range(steps):
        if value < tol:
            break
        slope = f.derivative(z)
        if slope == 0:
            break
        candidate = z - f(z) / slope
        if (complex(candidate).imag > 0) != f.upper:
            LOGGER.debug("newton step %d from %s left the half plane", step, z)
            break
        z = candidate
        value = float(abs(f(z)))
    refined = value < tol or (start > 0 and value <= 1e-3 * start)
    if not refined:
        LOGGER.warning("eigenvalue candidate %s not refined: |f| went %.3e -> %.3e", z0, start, value)
    return Eigenvalue(z, refined, value, z0)


def _deduplicate(values: list[Eigenvalue]) -> list[Eigenvalue]:
    out: list[Eigenvalue] = []
    for e in sorted(values, key=lambda e: (not e.refined, e.residual)):
        if all(abs(complex(e.z) - complex(o.z)) > DEDUPLICATE_TOL for o in out):
            out.append(e)
    return sorted(out, key=lambda e: (-complex(e.z).imag, complex(e.z).real))


def discrete_spectrum(problem: ScatteringProblem, a: AnalyticPart, big_a: AnalyticPart, config: SpectrumConfig) -> list[Eigenvalue]:
    """Finite-section eigenvalues refined by Newton on ``a`` (upper) and ``A`` (lower).

    Candidates that Newton does not confirm are returned with ``refined=False``.
    """
    if problem.is_zero():
        return []
    candidates = finite_section_eigenvalues(problem, config)

    def refine(z: Any) -> Eigenvalue:
        f = a if complex(z).imag > 0 else big_a
        return newton_refine(f, z, config.newton_steps, config.newton_tol)

    return _deduplicate(ordered_map(refine, candidates))


def _component_ratio(num: tuple[Scalar, Scalar], den: tuple[Scalar, Scalar], z: Any) -> Scalar:
    """Common ratio ``num / den`` of two proportional vectors, checked componentwise."""
    ratios = [n / d for n, d in zip(num, den, strict=True) if abs(d) > 1e-300]
    if not ratios:
        raise NormingConstantError(z, "both components of the reference solution vanish")
    weights = [float(abs(d)) for d in den]
    best = ratios[int(np.argmax(weights))] if len(ratios) == 2 else ratios[0]
    if len(ratios) == 2:
        spread = float(abs(ratios[0] - ratios[1]))
        if spread > RATIO_TOL * max(float(abs(best)), 1.0):
            raise NormingConstantError(z, f"component ratios disagree by {spread:.3e}")
    return best


def proportionality_constant(problem: ScatteringProblem, z: Any) -> Scalar:
    """``b_j`` with ``mu^-_1 = b mu^+_2`` at a zero of ``a`` or ``mu^-_2 = b mu^+_1`` at a zero of ``A``.

    Both Jost solutions are evaluated at ``x = 0``; ``mu^+`` comes from the
    reflected problem at ``-z``.
    """
    reflected = problem.reflected()
    x0 = problem.params.precision.real(0)
    if complex(z).imag > 0:
        f, h = solve_phi(problem, z, 1).evaluate(problem, x0)
        p, s = solve_phi(reflected, -z, 2).evaluate(reflected, x0)
        return _component_ratio((1 + f, h), (p, 1 + s), z)
    w, y = solve_phi(problem, z, 2).evaluate(problem, x0)
    f, h = solve_phi(reflected, -z, 1).evaluate(reflected, x0)
    return _component_ratio((w, 1 + y), (1 + f, h), z)


def norming_constants(problem: ScatteringProblem, eigenvalue: Eigenvalue, a: AnalyticPart, big_a: AnalyticPart) -> DiscreteDatum:
    """``b``, ``c`` and ``d`` at a refined eigenvalue.

    Raises:
        NormingConstantError: If the Jost solutions are not proportional or the
            derivative vanishes.
    """
    z = eigenvalue.z
    f = a if eigenvalue.upper else big_a
    derivative = f.derivative(z)
    if abs(derivative) < 1e-300:
        raise NormingConstantError(z, "derivative of a/A vanishes")
    b = proportionality_constant(problem, z)
    datum = DiscreteDatum.from_b(z, b, derivative)
    LOGGER.debug("eigenvalue %s: b=%s c=%s d=%s", z, b, datum.c, datum.d)
    return datum

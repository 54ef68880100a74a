"""Left and right scattering data from one forward pass."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np

from akns_rational.basis.expansion import RationalExpansion, from_grid_values
from akns_rational.basis.grid import InterpolationGrid
from akns_rational.basis.mobius import BasisParams
from akns_rational.errors import NormingConstantError, SpectralSingularityError
from akns_rational.scattering.forward import ScatteringMatrix, ScatteringProblem, scattering_matrices
from akns_rational.scattering.spectrum import (
    AnalyticPart,
    DiscreteDatum,
    Eigenvalue,
    SpectrumConfig,
    discrete_spectrum,
    norming_constants,
)

LOGGER = logging.getLogger(__name__)

SINGULARITY_FLOOR = 1e-10
DEFAULT_REFLECTION_SIZE = 256


@dataclass(frozen=True, slots=True, eq=False)
class ScatteringData:
    """Reflection coefficients of both scattering maps and the discrete data.

    ``rho1 = b/a``, ``rho2 = B/A`` (left) and ``gamma1 = B/a``, ``gamma2 = b/A``
    (right); each discrete datum carries the left constant ``c`` and the right
    constant ``d``.
    """

    rho1: RationalExpansion
    rho2: RationalExpansion
    gamma1: RationalExpansion
    gamma2: RationalExpansion
    plus: tuple[DiscreteDatum, ...] = ()
    minus: tuple[DiscreteDatum, ...] = ()
    meta: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for e in (self.rho2, self.gamma1, self.gamma2):
            self.rho1._check(e)
        for d in self.plus:
            if complex(d.z).imag <= 0:
                raise ValueError(f"upper eigenvalues must have Im z > 0, got {d.z}")
        for d in self.minus:
            if complex(d.z).imag >= 0:
                raise ValueError(f"lower eigenvalues must have Im z < 0, got {d.z}")

    @classmethod
    def zero(cls, params: BasisParams) -> ScatteringData:
        empty = RationalExpansion.zero(params)
        return cls(empty, empty, empty, empty)

    @property
    def params(self) -> BasisParams:
        return self.rho1.params

    @property
    def nu(self) -> float:
        return self.params.nu

    def is_reflectionless(self) -> bool:
        return all(e.norm() == 0 for e in (self.rho1, self.rho2))

    def is_empty(self) -> bool:
        return self.is_reflectionless() and not self.plus and not self.minus

    def mirrored(self) -> ScatteringData:
        """Left data of ``(r(-x), q(-x))``, i.e. the right data of ``(q, r)``, and vice versa."""

        def flip(d: DiscreteDatum) -> DiscreteDatum:
            return DiscreteDatum.from_b(d.z, -1 / d.b, d.derivative)

        return ScatteringData(
            self.gamma1,
            self.gamma2,
            self.rho1,
            self.rho2,
            tuple(flip(d) for d in self.plus),
            tuple(flip(d) for d in self.minus),
            dict(self.meta),
        )


@dataclass(frozen=True, slots=True, eq=False)
class ContinuousSpectrum:
    """Samples of ``S`` on an interpolation grid and the expansions built from them."""

    grid: InterpolationGrid
    matrices: tuple[ScatteringMatrix, ...]
    rho1: RationalExpansion
    rho2: RationalExpansion
    gamma1: RationalExpansion
    gamma2: RationalExpansion
    a: AnalyticPart
    big_a: AnalyticPart

    @property
    def max_residual(self) -> float:
        return max((m.residual for m in self.matrices), default=0.0)

    @property
    def max_det_defect(self) -> float:
        return max((float(abs(m.det - 1)) for m in self.matrices), default=0.0)


def reflection_coefficients(problem: ScatteringProblem, n: int = DEFAULT_REFLECTION_SIZE) -> ContinuousSpectrum:
    """Sample ``S`` at the nodes of the size-``n`` grid of the spectral basis and interpolate.

    Raises:
        SpectralSingularityError: If ``|a|`` or ``|A|`` drops below 1e-10 at a node.
    """
    params = problem.spectral_params
    precision = params.precision
    grid = InterpolationGrid.from_size(params, n)
    matrices = tuple(scattering_matrices(problem, list(grid.omegas[1:])))
    columns = {name: precision.zeros(n) for name in ("rho1", "rho2", "gamma1", "gamma2", "a", "A")}
    for i, s in enumerate(matrices, start=1):
        for which, value in (("a", s.a), ("A", s.A)):
            if abs(value) < SINGULARITY_FLOOR:
                raise SpectralSingularityError(s.k, which, value)
        columns["rho1"][i] = s.b / s.a
        columns["rho2"][i] = s.B / s.A
        columns["gamma1"][i] = s.B / s.a
        columns["gamma2"][i] = s.b / s.A
        columns["a"][i] = s.a - 1
        columns["A"][i] = s.A - 1
    out = {name: from_grid_values(values, params) for name, values in columns.items()}
    spectrum = ContinuousSpectrum(
        grid,
        matrices,
        out["rho1"],
        out["rho2"],
        out["gamma1"],
        out["gamma2"],
        AnalyticPart(out["a"], upper=True),
        AnalyticPart(out["A"], upper=False),
    )
    LOGGER.info(
        "sampled S on %d nodes: max residual %.3e, max |det S - 1| %.3e, %d low confidence",
        n - 1,
        spectrum.max_residual,
        spectrum.max_det_defect,
        sum(1 for m in matrices if m.low_confidence),
    )
    return spectrum


def _discrete_data(
    problem: ScatteringProblem, continuous: ContinuousSpectrum, eigenvalues: Sequence[Eigenvalue], meta: dict[str, Any]
) -> tuple[tuple[DiscreteDatum, ...], tuple[DiscreteDatum, ...]]:
    plus: list[DiscreteDatum] = []
    minus: list[DiscreteDatum] = []
    for e in eigenvalues:
        if not e.refined:
            meta.setdefault("unrefined", []).append([float(complex(e.z).real), float(complex(e.z).imag)])
            continue
        try:
            datum = norming_constants(problem, e, continuous.a, continuous.big_a)
        except NormingConstantError as exc:
            LOGGER.warning("dropping eigenvalue %s: %s", e.z, exc)
            meta.setdefault("failed", []).append(str(exc))
            continue
        (plus if e.upper else minus).append(datum)
    return tuple(plus), tuple(minus)


def scatter_left(problem: ScatteringProblem, n: int = DEFAULT_REFLECTION_SIZE, spectrum: SpectrumConfig | None = None) -> ScatteringData:
    """Reflection coefficients and discrete data of ``(q, r)`` from a single forward pass.

    ``spectrum=None`` skips the eigenvalue search; the zero potential has no
    discrete data.
    """
    config = problem.config
    if problem.is_zero():
        data = ScatteringData.zero(problem.spectral_params)
        data.meta.update({"grid_size": n, "cols": config.cols, "rows": config.rows, "max_residual": 0.0, "max_det_defect": 0.0})
        return data
    continuous = reflection_coefficients(problem, n)
    meta: dict[str, Any] = {
        "grid_size": n,
        "cols": config.cols,
        "rows": config.rows,
        "max_residual": continuous.max_residual,
        "max_det_defect": continuous.max_det_defect,
        "low_confidence": sum(1 for m in continuous.matrices if m.low_confidence),
        "split_defect": max(continuous.a.split_defect(), continuous.big_a.split_defect()),
    }
    plus: tuple[DiscreteDatum, ...] = ()
    minus: tuple[DiscreteDatum, ...] = ()
    if spectrum is not None:
        spectral_problem = problem_with_nu(problem, spectrum.nu)
        eigenvalues = discrete_spectrum(spectral_problem, continuous.a, continuous.big_a, spectrum)
        meta["eigen_size"] = spectrum.size
        plus, minus = _discrete_data(problem, continuous, eigenvalues, meta)
    return ScatteringData(continuous.rho1, continuous.rho2, continuous.gamma1, continuous.gamma2, plus, minus, meta)


def scatter_right(problem: ScatteringProblem, n: int = DEFAULT_REFLECTION_SIZE, spectrum: SpectrumConfig | None = None) -> ScatteringData:
    """Right scattering data ``(gamma1, gamma2, z, d)`` as the left data of a mirrored view."""
    return scatter_left(problem, n, spectrum).mirrored()


def scatter_right_independent(problem: ScatteringProblem, n: int = DEFAULT_REFLECTION_SIZE, spectrum: SpectrumConfig | None = None) -> ScatteringData:
    """Right data computed as the left data of ``(r(-x), q(-x))`` with a second forward pass."""
    return scatter_left(problem.mirror_swapped(), n, spectrum)


def problem_with_nu(problem: ScatteringProblem, nu: float) -> ScatteringProblem:
    """Re-expand the potentials of ``problem`` with ``x``-space basis scale ``nu``."""
    if nu == problem.params.nu:
        return problem
    config = replace(problem.config, x_nu=nu)
    return ScatteringProblem.from_functions(problem.q.evaluate, problem.r.evaluate, config)


def check_symmetry(matrices: Sequence[ScatteringMatrix], lam: int) -> float:
    """Largest residual of ``A(k) = conj(a(k))`` and ``B(k) = lam conj(b(k))`` on real ``k``."""
    if lam not in (1, -1):
        raise ValueError(f"lam must be +1 or -1, got {lam}")
    worst = 0.0
    for s in matrices:
        worst = max(worst, float(abs(s.A - np.conj(complex(s.a)))), float(abs(s.B - lam * np.conj(complex(s.b)))))
    return worst

"""Forward scattering: Jost solutions, ``S(k)``, discrete spectrum and scattering data."""

from akns_rational.scattering.data import (
    ContinuousSpectrum,
    ScatteringData,
    check_symmetry,
    reflection_coefficients,
    scatter_left,
    scatter_right,
    scatter_right_independent,
)
from akns_rational.scattering.forward import (
    PhiSolution,
    ScatteringConfig,
    ScatteringMatrix,
    ScatteringProblem,
    scattering_matrices,
    scattering_matrix,
    solve_phi,
)
from akns_rational.scattering.recovery import RecoveredAnalytic, recover_aA_from_reflection
from akns_rational.scattering.references import KdvReference, SechReference
from akns_rational.scattering.spectrum import (
    AnalyticPart,
    DiscreteDatum,
    Eigenvalue,
    SpectrumConfig,
    discrete_spectrum,
    norming_constants,
)

__all__ = [
    "AnalyticPart",
    "ContinuousSpectrum",
    "DiscreteDatum",
    "Eigenvalue",
    "KdvReference",
    "PhiSolution",
    "RecoveredAnalytic",
    "ScatteringConfig",
    "ScatteringData",
    "ScatteringMatrix",
    "ScatteringProblem",
    "SechReference",
    "SpectrumConfig",
    "check_symmetry",
    "discrete_spectrum",
    "norming_constants",
    "recover_aA_from_reflection",
    "reflection_coefficients",
    "scatter_left",
    "scatter_right",
    "scatter_right_independent",
    "scattering_matrices",
    "scattering_matrix",
    "solve_phi",
]

"""Forward and inverse scattering for the AKNS system in an oscillatory rational basis."""

from akns_rational.basis import BasisParams, OscillatoryBundle, RationalExpansion, interpolate
from akns_rational.fourier import Driver, ft_ode, ft_ode_adaptive, ft_series
from akns_rational.inverse import InverseConfig, Side, inverse_transform, kdv_recover, solve_rhp
from akns_rational.numeric_core import DOUBLE, Precision
from akns_rational.scattering import (
    ScatteringConfig,
    ScatteringData,
    ScatteringProblem,
    SpectrumConfig,
    scatter_left,
    scatter_right,
)

__all__ = [
    "DOUBLE",
    "BasisParams",
    "Driver",
    "InverseConfig",
    "OscillatoryBundle",
    "Precision",
    "RationalExpansion",
    "ScatteringConfig",
    "ScatteringData",
    "ScatteringProblem",
    "Side",
    "SpectrumConfig",
    "ft_ode",
    "ft_ode_adaptive",
    "ft_series",
    "interpolate",
    "inverse_transform",
    "kdv_recover",
    "scatter_left",
    "scatter_right",
    "solve_rhp",
]

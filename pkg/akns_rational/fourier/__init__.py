"""Fourier transforms by the driver ODE and by closed-form series."""

from akns_rational.fourier.drivers import DECONVOLUTION_FLOOR, Driver, DriverKind, gaussian_transform, phi_gauss
from akns_rational.fourier.ode import TransformResult, expand_potential, ft_ode, ft_ode_adaptive, ft_ode_grid
from akns_rational.fourier.series import ft_by_expansion, ft_series, ft_series_grid

__all__ = [
    "DECONVOLUTION_FLOOR",
    "Driver",
    "DriverKind",
    "TransformResult",
    "expand_potential",
    "ft_by_expansion",
    "ft_ode",
    "ft_ode_adaptive",
    "ft_ode_grid",
    "ft_series",
    "ft_series_grid",
    "gaussian_transform",
    "phi_gauss",
]

"""Closed-form references that the CLI tables are compared against."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

from akns_rational.cli.presets import PotentialFunction, PotentialSpec, Preset

Transform = Callable[[complex], complex]


def gaussian_ft(c: float) -> Transform:
    """``int e^{-ikx} e^{-c x^2} dx = sqrt(pi/c) exp(-k^2/(4c))``, entire in ``k``."""

    def transform(k: complex) -> complex:
        return complex(np.sqrt(np.pi / c) * np.exp(-complex(k) ** 2 / (4 * c)))

    return transform


def rational_ft(k: complex) -> complex:
    """Transform of ``1/(x - 1 - i) - 1/(3x + i)`` on the real line."""
    kr = complex(k).real
    if kr < 0:
        return 2j * np.pi * np.exp(-1j * kr + kr)
    if kr == 0:
        return 2j * np.pi * 2 / 3
    return 2j * np.pi * np.exp(-kr / 3) / 3


def sech2_ft(u0: float) -> Transform:
    """``int e^{-ikx} U0 sech^2 x dx = U0 pi k / sinh(pi k / 2)``."""

    def transform(k: complex) -> complex:
        k = complex(k)
        if k == 0:
            return complex(2 * u0)
        return complex(u0 * np.pi * k / np.sinh(np.pi * k / 2))

    return transform


def sech_ft(amplitude: float) -> Transform:
    """Transform of the unmodulated ``-i A sech x``: ``-i A pi sech(pi k / 2)``."""

    def transform(k: complex) -> complex:
        return complex(-1j * amplitude * np.pi / np.cosh(np.pi * complex(k) / 2))

    return transform


def fourier_reference(spec: PotentialSpec) -> Transform | None:
    """Closed form of ``q_hat`` for ``spec``, or ``None`` when none is known."""
    match spec.preset:
        case Preset.GAUSSIAN:
            return gaussian_ft(spec.number("c", 1.0))
        case Preset.GAUSSIAN_PAIR:
            return gaussian_ft(1.0)
        case Preset.RATIONAL:
            return rational_ft
        case Preset.KDV_SECH2:
            return sech2_ft(spec.number("U0", -1.0))
        case Preset.SECH_MODULATED if spec.number("gamma", 0.0) == 0.0:
            return sech_ft(spec.number("A", 1.0))
        case Preset.ZERO:
            return lambda k: 0j
    return None


def potential_reference(spec: PotentialSpec) -> tuple[PotentialFunction, PotentialFunction] | None:
    """``(q, r)`` in closed form, or ``None`` for sampled or non-decaying potentials."""
    if spec.preset in (Preset.CUSTOM_SAMPLES, Preset.KDV_SECH2):
        return None
    return spec.q(), spec.r()

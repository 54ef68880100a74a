"""Named potentials accepted by ``--potential``.

A preset is written ``name`` or ``name:key=value,key=value``, for example
``sech-modulated:A=1.65,gamma=0.1`` or ``custom-samples:path=q.csv``.
"""

from __future__ import annotations

import csv
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from akns_rational.scattering.references import KdvReference, SechReference

PotentialFunction = Callable[[np.ndarray], np.ndarray]


class Preset(Enum):
    GAUSSIAN = "gaussian"
    GAUSSIAN_PAIR = "gaussian-pair"
    SECH_MODULATED = "sech-modulated"
    RATIONAL = "rational"
    KDV_SECH2 = "kdv-sech2"
    CUSTOM_SAMPLES = "custom-samples"
    ZERO = "zero"


_KEYS: dict[Preset, frozenset[str]] = {
    Preset.GAUSSIAN: frozenset({"c", "lam"}),
    Preset.GAUSSIAN_PAIR: frozenset(),
    Preset.SECH_MODULATED: frozenset({"A", "gamma", "lam"}),
    Preset.RATIONAL: frozenset({"lam"}),
    Preset.KDV_SECH2: frozenset({"U0"}),
    Preset.CUSTOM_SAMPLES: frozenset({"path"}),
    Preset.ZERO: frozenset(),
}


@dataclass(frozen=True, slots=True)
class SampledPotential:
    """Columns ``x, q_re, q_im[, r_re, r_im]`` of a CSV file, linearly interpolated and zero outside."""

    x: np.ndarray
    q: np.ndarray
    r: np.ndarray | None

    @classmethod
    def load(cls, path: Path) -> SampledPotential:
        with path.open(newline="", encoding="utf-8") as f:
            rows = [row for row in csv.reader(f) if row and not row[0].lstrip().startswith("#")]
        if rows and not _is_number(rows[0][0]):
            rows = rows[1:]
        if not rows:
            raise ValueError(f"{path} holds no samples")
        widths = {len(row) for row in rows}
        if widths not in ({3}, {5}):
            raise ValueError(f"{path} rows must have 3 or 5 columns, got {sorted(widths)}")
        table = np.array([[float(v) for v in row] for row in rows])
        order = np.argsort(table[:, 0], kind="stable")
        table = table[order]
        q = table[:, 1] + 1j * table[:, 2]
        r = table[:, 3] + 1j * table[:, 4] if table.shape[1] == 5 else None
        return cls(table[:, 0], q, r)

    def _interp(self, values: np.ndarray, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        re = np.interp(x, self.x, values.real, left=0.0, right=0.0)
        im = np.interp(x, self.x, values.imag, left=0.0, right=0.0)
        return re + 1j * im

    def q_at(self, x: np.ndarray) -> np.ndarray:
        return self._interp(self.q, x)

    def r_at(self, x: np.ndarray) -> np.ndarray:
        if self.r is None:
            return -np.conj(self.q_at(x))
        return self._interp(self.r, x)


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


@dataclass(frozen=True, slots=True)
class PotentialSpec:
    """A preset with its parameters.

    ``lam`` fixes ``r = lam conj(q)`` for the presets that define only ``q``.
    """

    preset: Preset
    params: dict[str, float | str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self._validate_keys()
        self._validate_ranges()

    def _validate_keys(self) -> None:
        unknown = set(self.params) - _KEYS[self.preset]
        if unknown:
            raise ValueError(f"{self.preset.value} does not take {sorted(unknown)}")
        if self.preset is Preset.CUSTOM_SAMPLES and "path" not in self.params:
            raise ValueError("custom-samples needs path=<file>")

    def _validate_ranges(self) -> None:
        if self.preset is Preset.SECH_MODULATED and not self.number("A", 1.0) > 0:
            raise ValueError(f"A must be positive, got {self.number('A', 1.0)}")
        if self.preset is Preset.KDV_SECH2 and self.number("U0", -1.0) > 0:
            raise ValueError(f"U0 must be <= 0, got {self.number('U0', -1.0)}")
        if self.preset is Preset.GAUSSIAN and not self.number("c", 1.0) > 0:
            raise ValueError(f"c must be positive, got {self.number('c', 1.0)}")
        if "lam" in self.params and self.number("lam", -1.0) not in (1.0, -1.0):
            raise ValueError(f"lam must be +1 or -1, got {self.params['lam']}")

    @classmethod
    def parse(cls, text: str) -> PotentialSpec:
        """Parse ``name[:key=value,...]``.

        Raises:
            ValueError: On an unknown preset, a malformed pair or a value out of range.
        """
        name, _, rest = text.strip().partition(":")
        try:
            preset = Preset(name)
        except ValueError:
            choices = ", ".join(p.value for p in Preset)
            raise ValueError(f"unknown preset {name!r}; choose from {choices}") from None
        params: dict[str, float | str] = {}
        for item in filter(None, (p.strip() for p in rest.split(","))):
            key, sep, value = item.partition("=")
            if not sep or not key:
                raise ValueError(f"expected key=value, got {item!r}")
            params[key] = value if key == "path" else float(value)
        return cls(preset, params)

    def __str__(self) -> str:
        if not self.params:
            return self.preset.value
        items = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.preset.value}:{items}"

    def number(self, key: str, default: float) -> float:
        return float(self.params.get(key, default))

    @property
    def lam(self) -> int:
        return int(self.number("lam", -1.0))

    def sech(self) -> SechReference:
        return SechReference(self.number("A", 1.0), self.number("gamma", 0.0), self.lam)

    def kdv(self) -> KdvReference:
        return KdvReference(self.number("U0", -1.0))

    def samples(self) -> SampledPotential:
        return SampledPotential.load(Path(str(self.params["path"])))

    def q(self) -> PotentialFunction:
        """``q(x)``; for ``kdv-sech2`` the decaying entry ``U0 sech^2`` instead of the constant ``q = -1``."""
        match self.preset:
            case Preset.GAUSSIAN:
                c = self.number("c", 1.0)
                return lambda x: np.exp(-c * np.asarray(x, dtype=float) ** 2).astype(complex)
            case Preset.GAUSSIAN_PAIR:
                return lambda x: np.exp(-np.asarray(x, dtype=float) ** 2).astype(complex)
            case Preset.SECH_MODULATED:
                return self.sech().q
            case Preset.RATIONAL:
                return lambda x: 1 / (np.asarray(x, dtype=float) - 1 - 1j) - 1 / (3 * np.asarray(x, dtype=float) + 1j)
            case Preset.KDV_SECH2:
                return lambda x: self.kdv().r(x).astype(complex)
            case Preset.CUSTOM_SAMPLES:
                return self.samples().q_at
            case Preset.ZERO:
                return lambda x: np.zeros(np.shape(x), dtype=complex)
        raise AssertionError(self.preset)

    def r(self) -> PotentialFunction:
        """``r(x)`` of the scattering problem.

        Raises:
            ValueError: For ``kdv-sech2``, whose ``q`` does not decay.
        """
        match self.preset:
            case Preset.GAUSSIAN_PAIR:
                return lambda x: -2 * np.exp(-np.asarray(x, dtype=float) ** 2 + 1j * np.asarray(x, dtype=float))
            case Preset.SECH_MODULATED:
                return self.sech().r
            case Preset.KDV_SECH2:
                raise ValueError("kdv-sech2 has non-decaying q; use the kdv command")
            case Preset.CUSTOM_SAMPLES:
                return self.samples().r_at
        q = self.q()
        lam = self.lam
        return lambda x: lam * np.conj(q(x))

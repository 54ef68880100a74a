"""Scattering-data JSON files and CSV tables.

Scalars are written as ``[re, im]`` pairs: JSON floats at double precision and
decimal strings with enough digits to round-trip at extended precision.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import sys
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
from mpmath.libmp import repr_dps

from akns_rational.basis.expansion import RationalExpansion
from akns_rational.basis.mobius import BasisParams
from akns_rational.numeric_core.scalar import Precision, Scalar
from akns_rational.scattering.data import ScatteringData
from akns_rational.scattering.spectrum import DiscreteDatum

FORMAT_VERSION = 1
_EXPANSIONS = ("rho1", "rho2", "gamma1", "gamma2")
_DATUM_FIELDS = ("z", "b", "c", "d", "derivative")


def json_safe(obj: Any) -> Any:
    """Recursively convert numpy scalars, complex numbers and paths into JSON types."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        obj = dataclasses.asdict(obj)
    if isinstance(obj, dict):
        return {str(k): json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_safe(v) for v in obj]
    if isinstance(obj, (np.integer, np.floating)):
        return obj.item()
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.ndarray):
        return json_safe(obj.tolist())
    if isinstance(obj, Path):
        return str(obj)
    return obj


def encode_scalar(z: Scalar, precision: Precision) -> list[Any]:
    if not precision.extended:
        z = complex(z)
        return [z.real, z.imag]
    ctx = precision.ctx
    z = ctx.mpc(z)
    n = repr_dps(ctx.prec)
    return [ctx.nstr(z.real, n), ctx.nstr(z.imag, n)]


def decode_scalar(pair: Sequence[Any], precision: Precision) -> Scalar:
    re, im = pair
    if not precision.extended:
        return complex(float(re), float(im))
    ctx = precision.ctx
    return ctx.mpc(ctx.mpf(re), ctx.mpf(im))


def encode_expansion(e: RationalExpansion) -> dict[str, Any]:
    precision = e.params.precision
    return {
        "alpha": e.alpha,
        "coeffs": [[j, *encode_scalar(c, precision)] for j, c in e.coefficients().items()],
    }


def decode_expansion(doc: dict[str, Any], params: BasisParams) -> RationalExpansion:
    coeffs = {int(j): decode_scalar((re, im), params.precision) for j, re, im in doc["coeffs"]}
    return RationalExpansion.from_coefficients(params, coeffs, float(doc.get("alpha", 0.0)))


def _encode_datum(d: DiscreteDatum, precision: Precision) -> dict[str, Any]:
    return {name: encode_scalar(getattr(d, name), precision) for name in _DATUM_FIELDS}


def _decode_datum(doc: dict[str, Any], precision: Precision) -> DiscreteDatum:
    values = {name: decode_scalar(doc[name], precision) for name in _DATUM_FIELDS if name in doc}
    if "derivative" not in values:
        values["derivative"] = values["b"] / values["c"]
    return DiscreteDatum(**values)


def dump_scattering(data: ScatteringData) -> str:
    """Serialise ``data``; equal inputs give byte-identical text."""
    precision = data.params.precision
    doc: dict[str, Any] = {"version": FORMAT_VERSION, "nu": data.nu, "digits": precision.digits}
    for name in _EXPANSIONS:
        doc[name] = encode_expansion(getattr(data, name))
    doc["poles_plus"] = [_encode_datum(d, precision) for d in data.plus]
    doc["poles_minus"] = [_encode_datum(d, precision) for d in data.minus]
    doc["meta"] = json_safe(data.meta)
    return json.dumps(doc, indent=2) + "\n"


def load_scattering(text: str, digits: int | None = None) -> ScatteringData:
    """Parse :func:`dump_scattering` output, at the file's precision unless ``digits`` is given.

    Raises:
        ValueError: If the document is not a scattering-data file.
    """
    try:
        doc = json.loads(text)
        params = BasisParams(float(doc["nu"]), Precision(digits if digits is not None else int(doc.get("digits", 16))))
        expansions = [decode_expansion(doc[name], params) for name in _EXPANSIONS]
        plus = tuple(_decode_datum(d, params.precision) for d in doc.get("poles_plus", []))
        minus = tuple(_decode_datum(d, params.precision) for d in doc.get("poles_minus", []))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"not a scattering-data file: {exc}") from exc
    return ScatteringData(*expansions, plus, minus, dict(doc.get("meta", {})))


def write_scattering_file(path: Path, data: ScatteringData) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_scattering(data), encoding="utf-8")


def read_scattering_file(path: Path, digits: int | None = None) -> ScatteringData:
    return load_scattering(path.read_text(encoding="utf-8"), digits)


@dataclass(slots=True)
class Table:
    """Rows of a CSV table with a fixed header, kept in insertion order."""

    header: tuple[str, ...]
    rows: list[tuple[Any, ...]] = field(default_factory=list)

    def append(self, *values: Any) -> None:
        if len(values) != len(self.header):
            raise ValueError(f"expected {len(self.header)} values, got {len(values)}")
        self.rows.append(values)

    def column(self, name: str) -> list[Any]:
        i = self.header.index(name)
        return [row[i] for row in self.rows]

    def max_of(self, name: str) -> float:
        values = [float(v) for v in self.column(name) if v is not None and v == v]
        return max(values, default=0.0)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def format_table(table: Table) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def write_table(table: Table, path: Path | None = None) -> None:
    """Write ``table`` as CSV to ``path``, or to stdout when ``path`` is ``None``."""
    text = format_table(table)
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def read_table(path: Path) -> Table:
    with path.open(newline="", encoding="utf-8") as f:
        rows = list(csv.reader(f))
    table = Table(tuple(rows[0]))
    for row in rows[1:]:
        table.rows.append(tuple(row))
    return table


def error_rows(points: Iterable[float], values: Iterable[complex], references: Iterable[complex | None]) -> list[tuple[Any, ...]]:
    """Rows ``(p, value_re, value_im, reference_re, reference_im, abs_error)``."""
    rows = []
    for p, v, ref in zip(points, values, references, strict=True):
        v = complex(v)
        if ref is None:
            rows.append((float(p), v.real, v.imag, None, None, None))
        else:
            ref = complex(ref)
            rows.append((float(p), v.real, v.imag, ref.real, ref.imag, abs(v - ref)))
    return rows

"""Chern-Connes character tables for the flip, Fourier, hexic and cubic crossed
products, as exact theta-linear vectors.

The tables exist twice: as constructors below and as JSON files under
``rotkit/data``.  ``load_tables`` cross-checks one against the other.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .scalar import I, OMEGA, THETA, ThetaLinear, flatten, unflatten

TABLE_NAMES = ("xi", "eta", "mu", "lambda")


@dataclass(frozen=True)
class SlotSchema:
    name: str
    labels: tuple[str, ...]

    def __len__(self):
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)


Z2 = SlotSchema("Z2", ("tau", "tau00", "tau01", "tau10", "tau11"))
Z4 = SlotSchema("Z4", ("tau", "T10", "T11", "T20", "T21", "T22"))
Z6 = SlotSchema("Z6", ("tau", "H10", "H20", "H21", "H30", "H31"))
Z3 = SlotSchema("Z3", ("tau", "S10", "S11", "S12"))

SCHEMAS = {2: Z2, 3: Z3, 4: Z4, 6: Z6}
SCHEMA_BY_NAME = {s.name: s for s in SCHEMAS.values()}


class ThetaWindow(enum.Enum):
    """Sign ``c`` in the flip table: -1 for 0 < theta < 1/2, +1 for 1/2 < theta < 1."""

    LOW = -1
    HIGH = 1

    @property
    def c(self) -> int:
        return self.value

    @classmethod
    def parse(cls, s: str) -> ThetaWindow:
        return cls[s.upper()]


@dataclass(frozen=True)
class CharacterVector:
    schema: SlotSchema
    entries: tuple[ThetaLinear, ...]

    def __post_init__(self):
        entries = tuple(ThetaLinear.coerce(e) for e in self.entries)
        if len(entries) != len(self.schema):
            raise ValueError(f"{self.schema.name} needs {len(self.schema)} entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    def __getitem__(self, label: str) -> ThetaLinear:
        return self.entries[self.schema.index(label)]

    def flat(self) -> list[Fraction]:
        return [x for e in self.entries for x in flatten(e)]

    def __add__(self, other: CharacterVector) -> CharacterVector:
        self._check(other)
        return CharacterVector(self.schema, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: CharacterVector) -> CharacterVector:
        self._check(other)
        return CharacterVector(self.schema, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __mul__(self, k) -> CharacterVector:
        return CharacterVector(self.schema, tuple(e * k for e in self.entries))

    __rmul__ = __mul__

    def _check(self, other: CharacterVector):
        if other.schema != self.schema:
            raise ValueError(f"schema mismatch: {self.schema.name} vs {other.schema.name}")


def combination(coeffs: Sequence[int], basis: Sequence[CharacterVector]) -> CharacterVector:
    if len(coeffs) != len(basis):
        raise ValueError("coefficient count does not match basis size")
    total = 0 * basis[0]
    for k, b in zip(coeffs, basis):
        if k:
            total = total + k * b
    return total


def flat_matrix(vectors: Iterable[CharacterVector]) -> list[list[Fraction]]:
    return [v.flat() for v in vectors]


def _vec(schema: SlotSchema, *entries) -> CharacterVector:
    return CharacterVector(schema, tuple(entries))


def _q(p: int, q: int = 1) -> Fraction:
    return Fraction(p, q)


def table_xi(window: ThetaWindow) -> list[CharacterVector]:
    c = window.c
    return [
        _vec(Z2, 1, 0, 0, 0, 0),
        _vec(Z2, _q(1, 2), 2, 0, 0, 0),
        _vec(Z2, _q(1, 2), 0, 2, 0, 0),
        _vec(Z2, _q(1, 2), 0, 0, 2, 0),
        _vec(Z2, _q(1, 2), 0, 0, 0, 2),
        _vec(Z2, THETA * _q(1, 2), 1, c, -c, -1),
    ]


def table_eta() -> list[CharacterVector]:
    one_minus_i = (1 - I) * _q(1, 4)
    t4 = THETA * _q(1, 4)
    return [
        _vec(Z4, _q(1, 2), 0, 0, _q(1, 2), 0, 0),
        _vec(Z4, _q(1, 2), one_minus_i, 0, 0, 0, 0),
        _vec(Z4, _q(1, 4), _q(1, 4), 0, _q(1, 4), 0, 0),
        _vec(Z4, _q(1, 2), 0, 0, 0, _q(1, 2), 0),
        _vec(Z4, _q(1, 2), 0, one_minus_i, 0, 0, 0),
        _vec(Z4, _q(1, 4), 0, _q(1, 4), 0, _q(1, 4), 0),
        _vec(Z4, t4, (1 + I) * _q(1, 8), (1 + I) * _q(1, 8), _q(1, 8), _q(1, 8), _q(1, 4)),
        _vec(Z4, t4, (I - 1) * _q(1, 8), (I - 1) * _q(1, 8), _q(-1, 8), _q(-1, 8), _q(-1, 4)),
        _vec(Z4, t4, (-1 - I) * _q(1, 8), (-1 - I) * _q(1, 8), _q(1, 8), _q(1, 8), _q(1, 4)),
    ]


def table_mu() -> list[CharacterVector]:
    s = _q(1, 6)
    w = OMEGA
    return [
        _vec(Z6, 1, 0, 0, 0, 0, 0),
        _vec(Z6, s, s, s, s, s, s),
        _vec(Z6, s, (1 - w) * s, -w * s, -w * s, -s, -s),
        _vec(Z6, s, -w * s, (w - 1) * s, (w - 1) * s, s, s),
        _vec(Z6, s, -s, s, s, -s, -s),
        _vec(Z6, s, (w - 1) * s, -w * s, -w * s, s, s),
        _vec(Z6, _q(1, 3), 0, 0, _q(1, 3), 0, 0),
        _vec(Z6, _q(1, 3), 0, 0, -w * _q(1, 3), 0, 0),
        _vec(Z6, _q(1, 2), 0, 0, 0, 0, _q(1, 2)),
        _vec(Z6, THETA * s, w * s, (1 + w) * _q(1, 18), (1 + w) * s, _q(1, 12), _q(1, 3)),
    ]


def table_lambda() -> list[CharacterVector]:
    t = _q(1, 3)
    w3 = -OMEGA * t
    n9 = (1 + OMEGA) * _q(1, 9)
    return [
        _vec(Z3, 1, 0, 0, 0),
        _vec(Z3, t, t, 0, 0),
        _vec(Z3, t, w3, 0, 0),
        _vec(Z3, t, 0, t, 0),
        _vec(Z3, t, 0, w3, 0),
        _vec(Z3, t, 0, 0, t),
        _vec(Z3, t, 0, 0, w3),
        _vec(Z3, THETA * t, n9, n9, n9),
    ]


def unit_vector(n: int) -> CharacterVector:
    """Character of the unit class [1] in the Z_n crossed product."""
    schema = SCHEMAS[n]
    return CharacterVector(schema, (1,) + (0,) * (len(schema) - 1))


def rieffel_vector(n: int) -> CharacterVector:
    """Character of the Rieffel projection [e_theta]: trace theta, nothing else."""
    schema = SCHEMAS[n]
    return CharacterVector(schema, (THETA,) + (0,) * (len(schema) - 1))


@dataclass(frozen=True)
class Tables:
    xi_low: tuple[CharacterVector, ...]
    xi_high: tuple[CharacterVector, ...]
    eta: tuple[CharacterVector, ...]
    mu: tuple[CharacterVector, ...]
    lam: tuple[CharacterVector, ...]

    def xi(self, window: ThetaWindow) -> tuple[CharacterVector, ...]:
        return self.xi_low if window is ThetaWindow.LOW else self.xi_high

    def basis(self, n: int, window: ThetaWindow) -> tuple[CharacterVector, ...]:
        """Z-basis of the character range for the Z_n crossed product."""
        return {2: self.xi(window), 3: self.lam, 4: self.eta, 6: self.mu}[n]


def builtin_tables() -> Tables:
    return Tables(
        tuple(table_xi(ThetaWindow.LOW)),
        tuple(table_xi(ThetaWindow.HIGH)),
        tuple(table_eta()),
        tuple(table_mu()),
        tuple(table_lambda()),
    )


# JSON: {"schema": [labels], "vectors": [[8 strings per entry] ...]}.
# xi.json carries the low window in "vectors" and both windows under "by_window".


def vectors_to_json(vectors: Sequence[CharacterVector]) -> list[list[list[str]]]:
    return [[[str(x) for x in flatten(e)] for e in v.entries] for v in vectors]


def vectors_from_json(schema: SlotSchema, data) -> list[CharacterVector]:
    return [CharacterVector(schema, tuple(unflatten(e) for e in v)) for v in data]


def table_to_json(name: str, tables: Tables) -> dict:
    if name == "xi":
        return {
            "schema": list(Z2.labels),
            "vectors": vectors_to_json(tables.xi_low),
            "by_window": {
                "low": vectors_to_json(tables.xi_low),
                "high": vectors_to_json(tables.xi_high),
            },
        }
    schema, vecs = {"eta": (Z4, tables.eta), "mu": (Z6, tables.mu), "lambda": (Z3, tables.lam)}[name]
    return {"schema": list(schema.labels), "vectors": vectors_to_json(vecs)}


def _schema_from_labels(labels) -> SlotSchema:
    for s in SCHEMAS.values():
        if tuple(labels) == s.labels:
            return s
    raise ValueError(f"unknown slot schema {labels}")


class TableMismatch(ValueError):
    pass


def export_tables(directory: str | Path, tables: Tables | None = None) -> list[Path]:
    tables = tables or builtin_tables()
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in TABLE_NAMES:
        p = out / f"{name}.json"
        p.write_text(dumps_table(table_to_json(name, tables)))
        paths.append(p)
    return paths


def _dump_vectors(vectors, indent: str) -> str:
    rows = [indent + "  " + json.dumps(v) for v in vectors]
    return "[\n" + ",\n".join(rows) + "\n" + indent + "]"


def dumps_table(data: dict) -> str:
    """JSON text with one character vector per line."""
    parts = ['  "schema": ' + json.dumps(data["schema"]), '  "vectors": ' + _dump_vectors(data["vectors"], "  ")]
    if "by_window" in data:
        windows = ",\n".join(
            f'    "{k}": ' + _dump_vectors(v, "    ") for k, v in data["by_window"].items()
        )
        parts.append('  "by_window": {\n' + windows + "\n  }")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def _read(directory: Path | None, name: str) -> dict:
    if directory is None:
        text = resources.files("rotkit").joinpath("data", f"{name}.json").read_text()
    else:
        text = (Path(directory) / f"{name}.json").read_text()
    return json.loads(text)


def load_tables(directory: str | Path | None = None, validate: bool = True) -> Tables:
    """Read the four JSON tables (shipped copies when ``directory`` is None).

    With ``validate``, any disagreement with the built-in constructors raises
    ``TableMismatch``.
    """
    d = Path(directory) if directory is not None else None
    loaded = {}
    for name in TABLE_NAMES:
        data = _read(d, name)
        schema = _schema_from_labels(data["schema"])
        if name == "xi":
            windows = data.get("by_window", {})
            low = vectors_from_json(schema, windows.get("low", data["vectors"]))
            high = vectors_from_json(schema, windows["high"]) if "high" in windows else low
            loaded["xi_low"], loaded["xi_high"] = tuple(low), tuple(high)
        else:
            key = "lam" if name == "lambda" else name
            loaded[key] = tuple(vectors_from_json(schema, data["vectors"]))
    tables = Tables(**loaded)
    if validate:
        diffs = compare_tables(tables, builtin_tables())
        if diffs:
            raise TableMismatch("; ".join(diffs))
    return tables


def compare_tables(a: Tables, b: Tables) -> list[str]:
    """Human-readable list of disagreements between two table sets."""
    diffs = []
    for field in ("xi_low", "xi_high", "eta", "mu", "lam"):
        va, vb = getattr(a, field), getattr(b, field)
        if len(va) != len(vb):
            diffs.append(f"{field}: {len(va)} vectors vs {len(vb)}")
            continue
        for k, (x, y) in enumerate(zip(va, vb), start=1):
            if x != y:
                diffs.append(f"{field}[{k}] differs")
    return diffs

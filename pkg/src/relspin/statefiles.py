"""JSON state-file ingestion with schema diagnostics.

Two document kinds are accepted.  An ensemble file:

    {"mass": 1.0,
     "ensemble": [{"weight": 0.5, "momentum": [0,0,0], "bloch": [0,0,1]}, ...],
     "boost": [0.3, 0, 0]}                      # optional; or {"axis": [...], "rapidity": r}

and a two-particle pair file:

    {"mass": 1.0, "k": [kx,ky,kz], "p": [px,py,pz],
     "a": [ax,ay,az], "b": [bx,by,bz],
     "coeffs": [[[re,im], ... 4], ... 4]}       # optional; default singlet

Complex numbers are [re, im] pairs.  Violations raise SchemaError with the
offending key path; JSON syntax errors keep their line/column diagnostics.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from .density import Ensemble, SharpState
from .epr import TwoParticleState, singlet_coeffs
from .lorentz import OnShellMomentum, sl2c_boost


class SchemaError(ValueError):
    """Invalid state-file content; message carries the key path."""


def _require(cond: bool, path: str, message: str):
    if not cond:
        raise SchemaError(f"{path}: {message}")


def _number(doc: Any, path: str) -> float:
    _require(isinstance(doc, (int, float)) and not isinstance(doc, bool), path, "expected a number")
    return float(doc)


def _vector3(doc: Any, path: str) -> np.ndarray:
    _require(isinstance(doc, list) and len(doc) == 3, path, "expected a list of 3 numbers")
    return np.array([_number(x, f"{path}[{i}]") for i, x in enumerate(doc)])


def _complex_matrix4(doc: Any, path: str) -> np.ndarray:
    _require(isinstance(doc, list) and len(doc) == 4, path, "expected 4 rows")
    out = np.zeros((4, 4), dtype=complex)
    for i, row in enumerate(doc):
        _require(isinstance(row, list) and len(row) == 4, f"{path}[{i}]", "expected 4 entries")
        for j, cell in enumerate(row):
            cell_path = f"{path}[{i}][{j}]"
            _require(isinstance(cell, list) and len(cell) == 2, cell_path, "expected [re, im]")
            out[i, j] = complex(_number(cell[0], cell_path), _number(cell[1], cell_path))
    return out


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as err:
            raise SchemaError(f"{path}: invalid JSON at line {err.lineno} column {err.colno}: {err.msg}") from err


@dataclass(frozen=True)
class StateFile:
    mass: float
    ensemble: Ensemble
    boost: np.ndarray | None  # spinor map of the requested boost


def load_state_file(path: str) -> StateFile:
    doc = load_json(path)
    _require(isinstance(doc, dict), "top-level", "expected an object")
    _require("mass" in doc, "mass", "missing required key")
    mass = _number(doc["mass"], "mass")
    _require(mass > 0.0, "mass", "must be positive")

    _require("ensemble" in doc, "ensemble", "missing required key")
    raw = doc["ensemble"]
    _require(isinstance(raw, list) and raw, "ensemble", "expected a non-empty list")
    entries = []
    for i, item in enumerate(raw):
        base = f"ensemble[{i}]"
        _require(isinstance(item, dict), base, "expected an object")
        for key in ("weight", "momentum", "bloch"):
            _require(key in item, f"{base}.{key}", "missing required key")
        weight = _number(item["weight"], f"{base}.weight")
        _require(weight > 0.0, f"{base}.weight", "must be positive")
        momentum = _vector3(item["momentum"], f"{base}.momentum")
        bloch = _vector3(item["bloch"], f"{base}.bloch")
        _require(
            np.linalg.norm(bloch) <= 1.0 + 1e-9,
            f"{base}.bloch",
            f"norm {np.linalg.norm(bloch):.12g} exceeds 1",
        )
        entries.append((weight, SharpState(OnShellMomentum(mass, momentum), bloch)))
    total = sum(w for w, _ in entries)
    _require(abs(total - 1.0) <= 1e-9, "ensemble", f"weights sum to {total:.12g}, expected 1")

    boost = None
    if "boost" in doc:
        boost = parse_boost(doc["boost"], "boost")
    unknown = set(doc) - {"mass", "ensemble", "boost"}
    _require(not unknown, "top-level", f"unknown keys {sorted(unknown)}")
    return StateFile(mass=mass, ensemble=Ensemble(tuple(entries)), boost=boost)


def parse_boost(doc: Any, path: str) -> np.ndarray:
    """Boost input to a spinor map: velocity 3-vector or axis/rapidity."""
    if isinstance(doc, list):
        velocity = _vector3(doc, path)
        speed = np.linalg.norm(velocity)
        _require(speed < 1.0, path, f"speed {speed:.12g} must be below 1")
        if speed == 0.0:
            return np.eye(2, dtype=complex)
        rapidity = np.arctanh(speed)
        axis = velocity / speed
    else:
        _require(isinstance(doc, dict), path, "expected a velocity list or {axis, rapidity}")
        _require("axis" in doc and "rapidity" in doc, path, "expected keys axis and rapidity")
        unknown = set(doc) - {"axis", "rapidity"}
        _require(not unknown, path, f"unknown keys {sorted(unknown)}")
        axis = _vector3(doc["axis"], f"{path}.axis")
        norm = np.linalg.norm(axis)
        _require(norm > 0.0, f"{path}.axis", "must be a nonzero vector")
        axis = axis / norm
        rapidity = _number(doc["rapidity"], f"{path}.rapidity")
    return sl2c_boost(OnShellMomentum(1.0, np.sinh(rapidity) * axis))


@dataclass(frozen=True)
class PairFile:
    state: TwoParticleState
    a: np.ndarray
    b: np.ndarray
    is_singlet: bool
    renormalized: list[str]  # names of direction keys that needed renormalization


def load_pair_file(path: str) -> PairFile:
    doc = load_json(path)
    _require(isinstance(doc, dict), "top-level", "expected an object")
    for key in ("mass", "k", "p", "a", "b"):
        _require(key in doc, key, "missing required key")
    mass = _number(doc["mass"], "mass")
    _require(mass > 0.0, "mass", "must be positive")
    k = OnShellMomentum(mass, _vector3(doc["k"], "k"))
    p = OnShellMomentum(mass, _vector3(doc["p"], "p"))

    renormalized = []
    directions = {}
    for key in ("a", "b"):
        vec = _vector3(doc[key], key)
        norm = np.linalg.norm(vec)
        _require(norm > 0.0, key, "must be a nonzero vector")
        if abs(norm - 1.0) > 1e-12:
            renormalized.append(key)
        directions[key] = vec / norm

    if "coeffs" in doc:
        coeffs = _complex_matrix4(doc["coeffs"], "coeffs")
        _require(np.max(np.abs(coeffs)) > 0.0, "coeffs", "must be nonzero")
    else:
        coeffs = singlet_coeffs()
    unknown = set(doc) - {"mass", "k", "p", "a", "b", "coeffs"}
    _require(not unknown, "top-level", f"unknown keys {sorted(unknown)}")

    state = TwoParticleState(k, p, coeffs)
    return PairFile(
        state=state,
        a=directions["a"],
        b=directions["b"],
        is_singlet=_is_singlet(coeffs),
        renormalized=renormalized,
    )


def _is_singlet(coeffs: np.ndarray) -> bool:
    """True when the coefficient matrix is a nonzero multiple of the singlet."""
    reference = singlet_coeffs()
    overlap = np.vdot(reference, coeffs)
    scale = overlap / np.vdot(reference, reference)
    return bool(np.max(np.abs(coeffs - scale * reference)) <= 1e-12 * max(np.max(np.abs(coeffs)), 1.0))

"""Strict reader for scenario files (JSON, schema 1).

Rationals may be given as numbers or "p/q" strings, complex numbers as
``[re, im]``. Every key not listed in :data:`FIELDS` is rejected.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import numbers as nb
from .errors import ParseError, UnknownSuite
from .scales import ScaleDim, parse_dim
from .tetrad import FACTOR_DIMS

SCHEMA_VERSION = 1

SUITES = (
    "ecmd-point",
    "ew-breaking",
    "fn-identities",
    "gauge-algebra",
    "lagrangian-audit",
    "mass-shell",
    "signatures",
    "spinor-clifford",
)

FIELDS = {
    "schema", "name", "backend", "tolerance", "suites", "seed", "samples", "theta_w", "mu",
    "lambda", "mass", "phi", "psi_R", "psi_L", "gauge", "tetrad", "dims",
}
GAUGE_FIELDS = {"A", "Z", "Wp"}


@dataclass(frozen=True)
class Scenario:
    name: str = "default"
    backend: str = nb.EXACT
    tolerance: float = 1e-12
    suites: tuple[str, ...] = SUITES
    seed: int = 0
    samples: int = 8
    theta_w: float = 0.5
    mu: Fraction = Fraction(1)
    lam: Fraction = Fraction(1, 2)
    mass: Fraction = Fraction(1)
    phi: np.ndarray = field(default_factory=lambda: np.array([0.3 + 0.1j, 0.8 - 0.2j]))
    psi_R: np.ndarray = field(default_factory=lambda: np.array([0.5, 0.25j]))
    psi_L: np.ndarray = field(default_factory=lambda: np.array([[0.1, 0.2 - 0.1j], [0.3j, -0.4]]))
    A: np.ndarray = field(default_factory=lambda: np.array([0.1, 0.2, -0.3, 0.4]))
    Z: np.ndarray = field(default_factory=lambda: np.array([0.5, -0.1, 0.0, 0.2]))
    Wp: np.ndarray = field(default_factory=lambda: np.array([0.1 + 0.2j, -0.3j, 0.25, 0.0]))
    tetrad: np.ndarray = field(default_factory=lambda: np.eye(4))
    dims: dict = field(default_factory=dict)


def _fail(msg: str):
    raise ParseError(msg)


def _rational(v, key: str) -> Fraction:
    if isinstance(v, bool):
        _fail(f"{key}: expected a number")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        if not math.isfinite(v):
            _fail(f"{key}: non-finite value")
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            _fail(f"{key}: cannot read {v!r} as a rational")
    _fail(f"{key}: expected a number or 'p/q' string")


def _real(v, key: str) -> float:
    return float(_rational(v, key))


def _complex(v, key: str) -> complex:
    if isinstance(v, list):
        if len(v) != 2:
            _fail(f"{key}: complex values are [re, im]")
        return complex(_real(v[0], key), _real(v[1], key))
    return complex(_real(v, key))


def _complex_array(v, shape: tuple, key: str) -> np.ndarray:
    def walk(node, depth):
        if depth == len(shape):
            return _complex(node, key)
        if not isinstance(node, list) or len(node) != shape[depth]:
            _fail(f"{key}: expected shape {shape}")
        return [walk(n, depth + 1) for n in node]

    return np.array(walk(v, 0), dtype=complex)


def _real_array(v, shape: tuple, key: str) -> np.ndarray:
    arr = _complex_array(v, shape, key)
    if np.any(arr.imag != 0):
        _fail(f"{key}: entries must be real")
    return arr.real.copy()


def parse_suites(value) -> tuple[str, ...]:
    """Suite list from a JSON list or a comma-separated string; sorted and de-duplicated."""
    if isinstance(value, str):
        names = [s.strip() for s in value.split(",") if s.strip()]
    elif isinstance(value, list) and all(isinstance(s, str) for s in value):
        names = value
    else:
        _fail("suites: expected a list of names")
    if names == ["all"]:
        return SUITES
    for s in names:
        if s not in SUITES:
            raise UnknownSuite(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    return tuple(sorted(set(names)))


def parse_dims(value) -> dict[str, ScaleDim]:
    if not isinstance(value, dict):
        _fail("dims: expected an object")
    out = {}
    for k, v in value.items():
        if k not in FACTOR_DIMS:
            _fail(f"dims: unknown factor {k!r}")
        if not isinstance(v, str):
            _fail(f"dims.{k}: expected a string such as 'L^-1'")
        try:
            out[k] = parse_dim(v)
        except ValueError as exc:
            raise ParseError(f"dims.{k}: {exc}") from None
    return out


def scenario_from_dict(data: dict) -> Scenario:
    if not isinstance(data, dict):
        _fail("scenario must be a JSON object")
    unknown = sorted(set(data) - FIELDS)
    if unknown:
        _fail(f"unknown keys: {', '.join(unknown)}")
    if data.get("schema", SCHEMA_VERSION) != SCHEMA_VERSION:
        _fail(f"unsupported schema {data.get('schema')!r}")
    kw: dict = {}
    if "name" in data:
        if not isinstance(data["name"], str):
            _fail("name: expected a string")
        kw["name"] = data["name"]
    if "backend" in data:
        if data["backend"] not in (nb.EXACT, nb.FLOAT):
            _fail("backend: expected 'exact' or 'float'")
        kw["backend"] = data["backend"]
    if "tolerance" in data:
        kw["tolerance"] = _real(data["tolerance"], "tolerance")
        if kw["tolerance"] < 0:
            _fail("tolerance must be non-negative")
    if "suites" in data:
        kw["suites"] = parse_suites(data["suites"])
    for key in ("seed", "samples"):
        if key in data:
            if not isinstance(data[key], int) or isinstance(data[key], bool) or data[key] < 0:
                _fail(f"{key}: expected a non-negative integer")
            kw[key] = data[key]
    if "theta_w" in data:
        kw["theta_w"] = _real(data["theta_w"], "theta_w")
    for key, attr in (("mu", "mu"), ("lambda", "lam"), ("mass", "mass")):
        if key in data:
            kw[attr] = _rational(data[key], key)
    if "phi" in data:
        kw["phi"] = _complex_array(data["phi"], (2,), "phi")
    if "psi_R" in data:
        kw["psi_R"] = _complex_array(data["psi_R"], (2,), "psi_R")
    if "psi_L" in data:
        kw["psi_L"] = _complex_array(data["psi_L"], (2, 2), "psi_L")
    if "gauge" in data:
        g = data["gauge"]
        if not isinstance(g, dict):
            _fail("gauge: expected an object")
        bad = sorted(set(g) - GAUGE_FIELDS)
        if bad:
            _fail(f"gauge: unknown keys: {', '.join(bad)}")
        if "A" in g:
            kw["A"] = _real_array(g["A"], (4,), "gauge.A")
        if "Z" in g:
            kw["Z"] = _real_array(g["Z"], (4,), "gauge.Z")
        if "Wp" in g:
            kw["Wp"] = _complex_array(g["Wp"], (4,), "gauge.Wp")
    if "tetrad" in data:
        kw["tetrad"] = _real_array(data["tetrad"], (4, 4), "tetrad")
    if "dims" in data:
        kw["dims"] = parse_dims(data["dims"])
    return Scenario(**kw)


def load_scenario(path: str | Path) -> Scenario:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return scenario_from_dict(data)

"""Scale spaces T^a L^b M^c with rational exponents, and scaled quantities."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, ParseError


@dataclass(frozen=True)
class ScaleDim:
    """Exponents of time, length and mass scales. Stored in lowest terms."""

    d_T: Fraction = Fraction(0)
    d_L: Fraction = Fraction(0)
    d_M: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("d_T", "d_L", "d_M"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __mul__(self, other: "ScaleDim") -> "ScaleDim":
        return dim_combine(self, other)

    def __truediv__(self, other: "ScaleDim") -> "ScaleDim":
        return dim_combine(self, dim_power(other, -1))

    def __pow__(self, r) -> "ScaleDim":
        return dim_power(self, r)

    def is_dimensionless(self) -> bool:
        return self == DIMENSIONLESS

    def __str__(self) -> str:
        return format_dim(self)


DIMENSIONLESS = ScaleDim()
T = ScaleDim(1, 0, 0)
L = ScaleDim(0, 1, 0)
M = ScaleDim(0, 0, 1)


def dim_combine(a: ScaleDim, b: ScaleDim) -> ScaleDim:
    """Tensor product of scale spaces: exponents add."""
    return ScaleDim(a.d_T + b.d_T, a.d_L + b.d_L, a.d_M + b.d_M)


def dim_power(d: ScaleDim, r) -> ScaleDim:
    r = Fraction(r)
    return ScaleDim(d.d_T * r, d.d_L * r, d.d_M * r)


def length_power(p) -> ScaleDim:
    return ScaleDim(0, p, 0)


def to_natural_units(d: ScaleDim) -> Fraction:
    """Length exponent once c identifies T with L and hbar identifies M with L^-1."""
    return d.d_L + d.d_T - d.d_M


# coupling constants and their scale dimensions
COUPLINGS = {
    "c": ScaleDim(-1, 1, 0),
    "hbar": ScaleDim(-1, 2, 1),
    "G": ScaleDim(-2, 3, -1),
    "e": ScaleDim(-1, Fraction(3, 2), Fraction(1, 2)),
    "m": ScaleDim(0, 0, 1),
}


_TOKEN = re.compile(r"([TLM])\^(-?\d+(?:/\d+)?)")


def parse_dim(text: str) -> ScaleDim:
    """Parse ``"T^-1 L^3/2 M^1/2"``; absent letters mean exponent 0, ``"1"`` is dimensionless."""
    text = text.strip()
    if text in ("", "1"):
        return DIMENSIONLESS
    exps = {"T": Fraction(0), "L": Fraction(0), "M": Fraction(0)}
    seen = set()
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if not m or m.group(1) in seen:
            raise ParseError(f"bad dimension literal {text!r}")
        seen.add(m.group(1))
        exps[m.group(1)] = Fraction(m.group(2))
    return ScaleDim(exps["T"], exps["L"], exps["M"])


def format_dim(d: ScaleDim) -> str:
    if d == DIMENSIONLESS:
        return "1"
    parts = []
    for sym, e in (("T", d.d_T), ("L", d.d_L), ("M", d.d_M)):
        if e != 0:
            parts.append(f"{sym}^{e}")
    return " ".join(parts)


@dataclass(frozen=True)
class ScaledQuantity:
    value: object
    dim: ScaleDim = DIMENSIONLESS

    def __add__(self, other: "ScaledQuantity") -> "ScaledQuantity":
        return scaled_op(self, other, "add")

    def __mul__(self, other: "ScaledQuantity") -> "ScaledQuantity":
        return scaled_op(self, other, "mul")


def scaled_op(a: ScaledQuantity, b: ScaledQuantity, kind: str) -> ScaledQuantity:
    if kind == "add":
        if a.dim != b.dim:
            raise DimensionMismatch(f"cannot add {a.dim} to {b.dim}")
        return ScaledQuantity(a.value + b.value, a.dim)
    if kind == "mul":
        return ScaledQuantity(a.value * b.value, dim_combine(a.dim, b.dim))
    raise ValueError(f"unknown operation {kind!r}")

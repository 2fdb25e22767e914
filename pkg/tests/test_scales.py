from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ewgeom.errors import DimensionMismatch, ParseError
from ewgeom.scales import (
    COUPLINGS,
    DIMENSIONLESS,
    L,
    M,
    T,
    ScaleDim,
    ScaledQuantity,
    dim_combine,
    dim_power,
    format_dim,
    parse_dim,
    scaled_op,
    to_natural_units,
)

q = st.fractions(min_value=-4, max_value=4, max_denominator=4)
dims = st.builds(ScaleDim, q, q, q)


def test_coupling_products():
    assert dim_combine(COUPLINGS["c"], COUPLINGS["hbar"]) == ScaleDim(-2, 3, 1)
    assert dim_combine(COUPLINGS["e"], COUPLINGS["e"]) == ScaleDim(-2, 3, 1)
    assert dim_combine(DIMENSIONLESS, COUPLINGS["G"]) == COUPLINGS["G"]


def test_powers():
    assert dim_power(ScaleDim(0, 2, 0), Fraction(1, 2)) == L
    assert dim_power(COUPLINGS["e"], 0) == DIMENSIONLESS
    assert dim_power(COUPLINGS["e"], 2) == ScaleDim(-2, 3, 1)


def test_natural_units():
    assert to_natural_units(COUPLINGS["e"]) == 0
    assert to_natural_units(COUPLINGS["m"]) == -1
    assert to_natural_units(COUPLINGS["G"]) == 2
    assert to_natural_units(COUPLINGS["c"]) == 0
    assert to_natural_units(COUPLINGS["hbar"]) == 0
    assert to_natural_units(DIMENSIONLESS) == 0


def test_scaled_quantities():
    assert ScaledQuantity(2, L) + ScaledQuantity(3, L) == ScaledQuantity(5, L)
    with pytest.raises(DimensionMismatch):
        ScaledQuantity(2, L) + ScaledQuantity(3, L * L)
    prod = scaled_op(ScaledQuantity(2, L / T), ScaledQuantity(3, M), "mul")
    assert prod == ScaledQuantity(6, ScaleDim(-1, 1, 1))


@given(dims, dims, dims)
def test_group_laws(a, b, c):
    assert dim_combine(dim_combine(a, b), c) == dim_combine(a, dim_combine(b, c))
    assert dim_combine(a, b) == dim_combine(b, a)
    assert dim_combine(a, dim_power(a, -1)) == DIMENSIONLESS


@given(dims, q, q)
def test_power_laws(a, r, s):
    assert dim_power(dim_power(a, r), s) == dim_power(a, r * s)
    assert dim_combine(dim_power(a, r), dim_power(a, s)) == dim_power(a, r + s)


@given(dims, dims)
def test_natural_units_is_a_homomorphism(a, b):
    assert to_natural_units(dim_combine(a, b)) == to_natural_units(a) + to_natural_units(b)


@given(dims)
def test_format_parse_round_trip(a):
    assert parse_dim(format_dim(a)) == a


@pytest.mark.parametrize("bad", ["L^x", "Q^2", "L^1 L^2", "L2"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_dim(bad)

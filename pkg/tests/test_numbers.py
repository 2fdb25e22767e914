from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ewgeom import numbers as nb
from ewgeom.errors import BackendMismatch
from ewgeom.numbers import Qi2

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
qi2 = st.builds(Qi2, small, small, small, small)


@given(qi2, qi2, qi2)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * (y * z) == (x * y) * z
    assert x + y == y + x


@given(qi2)
def test_inverse(x):
    if not x.is_zero():
        assert x * (1 / x) == nb.ONE


@given(qi2, qi2)
def test_conjugation_is_multiplicative(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


@given(qi2)
def test_complex_image_agrees(x):
    y = x * x.conjugate() + x
    assert abs(complex(y) - (complex(x) * complex(x).conjugate() + complex(x))) < 1e-9


def test_sqrt2_and_inverse():
    assert nb.SQRT2 * nb.SQRT2 == Qi2(2)
    assert nb.INV_SQRT2 * nb.SQRT2 == nb.ONE
    assert nb.I * nb.I == Qi2(-1)


def test_exact_square_roots():
    assert Qi2(4).sqrt() == Qi2(2)
    assert Qi2(2).sqrt() == nb.SQRT2
    assert Qi2(Fraction(1, 2)).sqrt() == nb.INV_SQRT2
    with pytest.raises(ValueError):
        Qi2(3).sqrt()


def test_sign_of_surds():
    assert Qi2(1, 0, -1).sign() == -1  # 1 - sqrt2 < 0
    assert Qi2(-1, 0, 1).sign() == 1
    assert Qi2(0).sign() == 0


def test_json_round_trip():
    arr = nb.exact_array([[1, "1/2"], [0, -3]]) * nb.INV_SQRT2
    arr[0, 1] = arr[0, 1] + nb.I
    back = nb.array_from_json(nb.array_to_json(arr), nb.EXACT)
    assert nb.arrays_equal(arr, back)


def test_backends_do_not_mix():
    with pytest.raises(BackendMismatch):
        nb.arrays_equal(nb.eye(2, nb.EXACT), np.eye(2, dtype=complex))


def test_to_float():
    arr = nb.exact_array([[1, 2]]) * nb.SQRT2
    assert np.allclose(nb.to_float(arr), np.sqrt(2) * np.array([[1, 2]]))

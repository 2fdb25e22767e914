import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ewgeom import gaugealg as ga
from ewgeom import numbers as nb
from ewgeom.cxmulti import (
    HermitianForm,
    IndexKind,
    MixedTensor,
    contract,
    dagger,
    exact_det,
    exact_inverse,
    h_contract,
    hermitian_split,
    signature,
    vv_bar,
)
from ewgeom.errors import SignatureError
from ewgeom.twospinor import k_matrix, pauli_matrices

gauss = st.builds(nb.gaussian, st.integers(-3, 3), st.integers(-3, 3))


def exact_matrices(n):
    return st.lists(gauss, min_size=n * n, max_size=n * n).map(lambda v: np.array(v, dtype=object).reshape(n, n))


def test_dagger_examples():
    w = vv_bar(nb.exact_array([[1, 0], [0, 0]]))
    w.components[0, 1] = nb.I
    assert nb.arrays_equal(dagger(w).components, nb.exact_array([[1, 0], [0, 0]]) + _at(1, 0, -nb.I))
    eye = vv_bar(nb.eye(2, nb.EXACT))
    assert nb.arrays_equal(dagger(eye).components, eye.components)
    u, v = nb.exact_array([1, 0]), nb.exact_array([0, 1])
    uv = vv_bar(np.outer(u, nb.conj(v)))
    assert nb.arrays_equal(dagger(uv).components, np.outer(v, nb.conj(u)))


def _at(i, j, value):
    m = nb.zeros((2, 2), nb.EXACT)
    m[i, j] = value
    return m


def test_hermitian_split_examples():
    half = nb.Qi2(1) / 2
    H, A = hermitian_split(vv_bar(nb.exact_array([[0, 1], [0, 0]])))
    assert nb.arrays_equal(H.components, _at(0, 1, half) + _at(1, 0, half))
    assert nb.arrays_equal(A.components, _at(0, 1, half) + _at(1, 0, -half))
    iid = vv_bar(nb.eye(2, nb.EXACT) * nb.I)
    H, A = hermitian_split(iid)
    assert nb.is_zero_array(H.components) and nb.arrays_equal(A.components, iid.components)


@given(exact_matrices(3))
def test_split_properties(m):
    w = vv_bar(m)
    H, A = hermitian_split(w)
    assert nb.arrays_equal((H + A).components, m)
    assert nb.arrays_equal(dagger(H).components, H.components)
    assert nb.arrays_equal(dagger(A).components, -A.components)
    assert nb.arrays_equal(dagger(dagger(w)).components, m)


def test_signature_examples():
    assert signature(HermitianForm(nb.exact_array(np.diag([1, -1, -1, -1])))) == (1, 3, 0)
    assert signature(HermitianForm(k_matrix())) == (2, 2, 0)
    assert signature(HermitianForm(nb.exact_array([[1, 0], [0, 0]]))) == (1, 0, 1)


def test_non_hermitian_rejected():
    with pytest.raises(SignatureError):
        HermitianForm(nb.exact_array([[0, 1], [0, 0]]))


@given(exact_matrices(3), st.lists(st.sampled_from([-1, 0, 1, 2]), min_size=3, max_size=3))
def test_sylvester_law(p, diag):
    """Congruence by an invertible P preserves the signature of diag(d)."""
    if exact_det(p).is_zero():
        return
    d = nb.exact_array(np.diag(diag))
    h = nb.conj(p).T @ d @ p
    expected = (sum(x > 0 for x in diag), sum(x < 0 for x in diag), sum(x == 0 for x in diag))
    assert signature(HermitianForm(h)) == expected


@given(exact_matrices(3))
def test_exact_and_float_signatures_agree(m):
    h = m + nb.conj(m).T
    assert signature(HermitianForm(h)) == signature(HermitianForm(nb.to_float(h)))


@given(exact_matrices(3))
def test_exact_inverse(m):
    if exact_det(m).is_zero():
        return
    assert nb.arrays_equal(m @ exact_inverse(m), nb.eye(3, nb.EXACT))


def test_h_contract_examples():
    h = HermitianForm(nb.eye(2, nb.EXACT))
    s = pauli_matrices(nb.EXACT)
    X = s[3] * nb.I
    assert h_contract(X, X, h) == nb.Qi2(2)
    assert h_contract(nb.zeros((2, 2), nb.EXACT), X, h) == nb.ZERO
    Y = s[1] * nb.I
    assert h_contract(Y, Y, h) == nb.Qi2(2) == ga.killing_like(Y, Y) / 2


def test_contraction_rules():
    v = MixedTensor((IndexKind.VEC,), nb.exact_array([1, 2]))
    f = MixedTensor((IndexKind.DUAL,), nb.exact_array([3, 4]))
    assert contract(v, 0, f, 0) == nb.Qi2(11)
    cbar = MixedTensor((IndexKind.CONJDUAL,), nb.exact_array([1, 1]))
    with pytest.raises(SignatureError):
        contract(v, 0, cbar, 0)
    assert v.conjugate().kinds == (IndexKind.CONJ,)

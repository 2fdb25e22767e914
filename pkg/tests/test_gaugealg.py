import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ewgeom import fnforms as fn
from ewgeom import gaugealg as ga
from ewgeom import numbers as nb
from ewgeom.cxmulti import HermitianForm, h_contract
from ewgeom.errors import DependentGenerators, NotClosed, SignatureError, ZeroCharge
from ewgeom.poly import Poly
from ewgeom.randgen import random_anti_hermitian, random_poly
from ewgeom.suites import charged_curvature_matches, q_grading, sample_charged_field
from ewgeom.twospinor import pauli_matrices

ETA_INV = np.diag([1, -1, -1, -1]).astype(object)
seeds = st.integers(0, 2**32 - 1)


def exact_su2_frame():
    return ga.orthonormalize(ga.su2_generators(nb.EXACT))


def test_killing_examples():
    s = pauli_matrices(nb.EXACT)
    X = s[1] * nb.I
    assert ga.killing_like(X, X) == nb.Qi2(4)
    half = nb.I / 2
    for j in range(1, 4):
        for k in range(1, 4):
            assert ga.killing_like(s[j] * half, s[k] * half) == (nb.ONE if j == k else nb.ZERO)
    assert ga.killing_like(X, nb.zeros((2, 2), nb.EXACT)).is_zero()


@given(seeds)
def test_killing_positive_on_anti_hermitian(seed):
    rng = np.random.default_rng(seed)
    X = random_anti_hermitian(rng, 3)
    assert ga.killing_like(X, X).real > 0
    assert abs(ga.killing_like(X, X).imag) < 1e-12


@given(seeds)
def test_half_killing_is_h_contraction(seed):
    rng = np.random.default_rng(seed)
    X, Y = random_anti_hermitian(rng, 2), random_anti_hermitian(rng, 2)
    h = HermitianForm(np.eye(2, dtype=complex))
    assert abs(h_contract(X, Y, h) - ga.h_contract_half_k(X, Y)) < 1e-12


def test_orthonormalize_examples():
    frame = exact_su2_frame()
    s = pauli_matrices(nb.EXACT)
    for j, g in enumerate(frame.generators, start=1):
        assert nb.arrays_equal(g, s[j] * (nb.I / 2))
    again = ga.orthonormalize(frame.generators)
    assert all(nb.arrays_equal(a, b) for a, b in zip(again.generators, frame.generators))
    u2 = ga.orthonormalize(ga.u2_generators(nb.EXACT))
    for j, g in enumerate(u2.generators):
        assert nb.arrays_equal(g, s[j] * (nb.I / 2))
    assert nb.arrays_equal(u2.gram(), nb.eye(4, nb.EXACT))


def test_orthonormalize_errors():
    s = pauli_matrices(nb.EXACT)
    with pytest.raises(DependentGenerators):
        ga.orthonormalize([s[1] * nb.I, s[1] * nb.I * 2])
    with pytest.raises(SignatureError):
        ga.orthonormalize([s[1]])


def test_structure_constants_su2():
    c = ga.structure_constants(exact_su2_frame())
    eps = ga.levi_civita3()
    for idx in np.ndindex(3, 3, 3):
        assert c[idx] == -eps[idx]
        assert isinstance(c[idx], Fraction)


def test_structure_constants_abelian_and_u2():
    diag = [nb.exact_array([[1, 0], [0, 0]]) * nb.I, nb.exact_array([[0, 0], [0, 1]]) * nb.I]
    c = ga.structure_constants(ga.orthonormalize(diag))
    assert all(v == 0 for v in c.flat)
    cu = ga.structure_constants(ga.orthonormalize(ga.u2_generators(nb.EXACT)))
    for idx in np.ndindex(cu.shape):
        if 0 in idx:
            assert cu[idx] == 0


def test_structure_constants_not_closed():
    s = pauli_matrices(nb.EXACT)
    with pytest.raises(NotClosed):
        ga.structure_constants(ga.orthonormalize([s[1] * nb.I, s[2] * nb.I]))


def test_float_structure_constants():
    c = ga.structure_constants(ga.orthonormalize(ga.su2_generators(nb.FLOAT)))
    assert np.allclose(c, -ga.levi_civita3(), atol=1e-14)


def test_killing_of_gl():
    A = nb.exact_array([[1, 2, 0], [0, 3, 1], [1, 0, 2]])
    B = nb.exact_array([[2, 0, 1], [1, 1, 0], [0, 2, 3]])
    assert ga.killing_true(A, B) == ga.killing_gl_closed_form(A, B) == nb.Qi2(24)  # brute-force tr(ad_A ad_B)
    assert ga.killing_single_trace_product(A, B) == nb.Qi2(60)


@given(seeds)
def test_killing_closed_form_random(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 4))
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    B = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    kt = ga.killing_true(A, B)
    assert abs(kt - ga.killing_gl_closed_form(A, B)) < 1e-10 * max(1.0, abs(kt))


def _abelian(X_entries, q):
    names = fn.chart_names(4, 0)
    z = Poly.zero(names)
    X = [[X_entries.get(a, z)] for a in range(4)]
    return ga.ChargedField(q, X)


def test_abelian_charged_curvature_example():
    names = fn.chart_names(4, 0)
    f = _abelian({1: Poly.var(names, "x1")}, Fraction(1))
    R = ga.charged_curvature(f, np.zeros((1, 1, 1), dtype=object))
    assert R[0, 1, 0] == Poly.const(names, -1)
    assert R[1, 0, 0] == Poly.const(names, 1)


def test_constant_commuting_field_is_flat():
    names = fn.chart_names(4, 0)
    f = _abelian({0: Poly.const(names, 2), 2: Poly.const(names, 5)}, Fraction(3))
    R = ga.charged_curvature(f, np.zeros((1, 1, 1), dtype=object))
    assert all(p.is_zero() for p in R.flat)


def test_charge_scaling_of_curvature_parts():
    f = sample_charged_field(Fraction(1))
    f2 = sample_charged_field(Fraction(2))
    c = ga.structure_constants(exact_su2_frame())
    no_c = np.zeros((3, 3, 3), dtype=object)
    lin1, lin2 = ga.charged_curvature(f, no_c), ga.charged_curvature(f2, no_c)
    quad1 = ga.charged_curvature(f, c) - lin1
    quad2 = ga.charged_curvature(f2, c) - lin2
    for idx in np.ndindex(lin1.shape):
        assert lin2[idx] == lin1[idx] * 2
        assert quad2[idx] == quad1[idx] * 4


@given(seeds)
def test_abelian_curvature_matches_line_bundle(seed):
    prng = random.Random(seed)
    names = fn.chart_names(4, 0)
    f = ga.ChargedField(Fraction(prng.randint(1, 5)), [[random_poly(prng, names)] for _ in range(4)])
    u1 = ga.orthonormalize([nb.exact_array([[nb.I]])])
    assert charged_curvature_matches(f, u1, np.zeros((1, 1, 1), dtype=object))


def test_line_bundle_connection_and_charge_power():
    prng = random.Random(2)
    names = fn.chart_names(3, 0)
    Y = [random_poly(prng, names) for _ in range(3)]
    k_names = fn.chart_names(3, 1)
    R1 = fn.linear_curvature_table(ga.line_bundle_connection(Y, k_names))
    for p in (-1, 1, 3):
        Rp = fn.linear_curvature_table(ga.line_bundle_connection(ga.charge_power(Y, p), k_names))
        for idx in np.ndindex(R1.shape):
            assert Rp[idx] == R1[idx] * p
    assert ga.charge_power(Y, 1) == Y
    assert ga.charge_power(Y, -1) == [-y for y in Y]


def test_nonabelian_curvature_matches_matrix_connection():
    frame = exact_su2_frame()
    assert charged_curvature_matches(sample_charged_field(), frame, ga.structure_constants(frame))


def test_gauge_lagrangian_zero_and_abelian_q_independence():
    names = fn.chart_names(4, 0)
    no_c = np.zeros((1, 1, 1), dtype=object)
    zero_f = _abelian({}, Fraction(2))
    assert ga.gauge_lagrangian(zero_f, ga.charged_curvature(zero_f, no_c), ETA_INV).is_zero()
    values = set()
    for q in (Fraction(1), Fraction(3), Fraction(-7, 2)):
        f = _abelian({1: Poly.var(names, "x1")}, q)
        values.add(ga.gauge_lagrangian(f, ga.charged_curvature(f, no_c), ETA_INV))
    assert len(values) == 1
    with pytest.raises(ZeroCharge):
        ga.gauge_lagrangian(_abelian({}, 0), ga.charged_curvature(_abelian({}, 0), no_c), ETA_INV)


def test_q_expansion_degrees():
    frame = exact_su2_frame()
    degrees, kinetic_ok = q_grading(sample_charged_field(), ga.structure_constants(frame), ETA_INV)
    assert degrees == [0, 1, 2]
    assert kinetic_ok


def test_q_expansion_reassembles_lagrangian():
    frame = exact_su2_frame()
    c = ga.structure_constants(frame)
    for q in (Fraction(1), Fraction(2), Fraction(-3)):
        f = sample_charged_field(q)
        exp = ga.lagrangian_q_expansion(f, c, ETA_INV)
        total = sum((p * q**k for k, p in exp.items()), Poly.zero(f.names))
        assert total == ga.gauge_lagrangian(f, ga.charged_curvature(f, c), ETA_INV)

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ewgeom import fnforms as fn
from ewgeom.errors import ChartMismatch, NonConstantDeterminant, ShapeMismatch
from ewgeom.poly import Poly
from ewgeom.randgen import (
    random_flat_connection,
    random_linear_connection,
    random_tvform,
    random_unimodular,
)
from ewgeom.suites import (
    alpha_decomposition_holds,
    curvature_closed_form_holds,
    gauge_conjugation_holds,
    graded_antisymmetry_holds,
    graded_jacobi_holds,
)
from oracles.fn_oracle import oracle_bracket

seeds = st.integers(0, 2**32 - 1)


def linear(n, k, entries):
    """LinearConnection from {(a, i, j): Poly} with zeros elsewhere."""
    names = fn.chart_names(n, k)
    c = np.empty((n, k, k), dtype=object)
    for idx in np.ndindex(c.shape):
        c[idx] = entries.get(idx, Poly.zero(names))
    return fn.LinearConnection(n, k, c)


def test_lie_bracket_example():
    # chart (x, y) = (x1, y1): u = x d_y, v = y d_x, [u, v] = x d_x - y d_y
    names = fn.chart_names(1, 1)
    x, y = Poly.var(names, 0), Poly.var(names, 1)
    z = Poly.zero(names)
    u = fn.vector_field(1, 1, [z, x])
    v = fn.vector_field(1, 1, [y, z])
    expected = fn.vector_field(1, 1, [x, -y])
    assert fn.fn_bracket(u, v) == expected
    assert fn.lie_bracket(u, v) == expected
    assert fn.fn_bracket(u, u).is_zero()


def test_zero_connection_is_flat():
    assert fn.curvature(fn.zero_linear_connection(2, 2)).is_zero()


def test_line_bundle_curvature_example():
    names = fn.chart_names(2, 1)
    g = linear(2, 1, {(1, 0, 0): Poly.var(names, "x1")})  # A = (0, x1)
    R = fn.curvature_table_from_form(fn.curvature(g))
    assert R[0, 1, 0, 0] == Poly.const(names, -1)
    assert R[1, 0, 0, 0] == Poly.const(names, 1)


def test_covariant_differential_examples():
    names = fn.chart_names(2, 1)
    x1, x2 = Poly.var(names, 0), Poly.var(names, 1)
    zero = fn.zero_linear_connection(2, 1)
    assert fn.covariant_differential(zero, [x1 * x2]) == [[x2], [x1]]
    g = linear(2, 1, {(0, 0, 0): Poly.const(names, 1)})
    one = Poly.const(names, 1)
    assert fn.covariant_differential(g, [one]) == [[-one], [Poly.zero(names)]]
    assert fn.covariant_differential(zero, [one]) == [[Poly.zero(names)], [Poly.zero(names)]]


def test_gauge_transform_examples():
    names = fn.chart_names(2, 2)
    one, zero, x1 = Poly.const(names, 1), Poly.zero(names), Poly.var(names, 0)
    S = np.array([[one, x1], [zero, one]], dtype=object)
    g = fn.gauge_transform(fn.zero_linear_connection(2, 2), S)
    assert np.all(g.matrix(0) == np.array([[zero, one], [zero, zero]], dtype=object))
    assert np.all(g.matrix(1) == np.array([[zero, zero], [zero, zero]], dtype=object))
    assert fn.curvature(g).is_zero()
    eye = np.array([[one, zero], [zero, one]], dtype=object)
    rng = random.Random(3)
    gamma = random_linear_connection(rng, 2, 2)
    assert np.all(fn.gauge_transform(gamma, eye).coeffs == gamma.coeffs)


def test_non_constant_determinant_rejected():
    names = fn.chart_names(1, 2)
    one, zero, x1 = Poly.const(names, 1), Poly.zero(names), Poly.var(names, 0)
    with pytest.raises(NonConstantDeterminant):
        fn.poly_inverse(np.array([[x1, zero], [zero, one]], dtype=object))


def test_alpha_decomposition_trivial_cases():
    rng = random.Random(5)
    g0 = random_flat_connection(rng, 2, 2)
    assert fn.decompose_alpha(g0, g0).is_zero()
    g = random_linear_connection(rng, 2, 2)
    alpha = fn.decompose_alpha(g, fn.zero_linear_connection(2, 2))
    assert fn.curvature_via_alpha(fn.zero_linear_connection(2, 2), alpha) == fn.curvature(g)
    assert fn.reconstruct(g0, fn.decompose_alpha(g, g0)) == g.to_tvform()


def test_form_validation():
    names = fn.chart_names(1, 1)
    with pytest.raises(ShapeMismatch):
        fn.TVForm(1, 1, 1, {((0, 0), 0): Poly.var(names, 0)})
    with pytest.raises(ChartMismatch):
        fn.TVForm(1, 1, 0, {((), 0): Poly.var(("z",), 0)})
    a = fn.TVForm(1, 1, 0, {})
    b = fn.TVForm(2, 1, 0, {})
    with pytest.raises(ChartMismatch):
        fn.fn_bracket(a, b)


def test_form_predicates():
    rng = random.Random(11)
    g = random_linear_connection(rng, 2, 2)
    assert g.to_tvform().is_projectable()
    assert g.to_tvform().is_linear()
    alpha = fn.decompose_alpha(g, fn.zero_linear_connection(2, 2))
    assert alpha.is_basic() and alpha.is_vertical_valued()


# --- oracle agreement and algebraic identities -------------------------------


@given(seeds)
def test_bracket_matches_decomposable_oracle(seed):
    rng = random.Random(seed)
    n, k = rng.randint(1, 2), rng.randint(1, 2)
    r, s = rng.randint(0, 2), rng.randint(0, 2)
    phi, psi = random_tvform(rng, n, k, r, density=2), random_tvform(rng, n, k, s, density=2)
    assert fn.fn_bracket(phi, psi) == oracle_bracket(phi, psi)


@given(seeds)
def test_graded_antisymmetry(seed):
    rng = random.Random(seed)
    n, k = rng.randint(1, 2), rng.randint(1, 2)
    assert graded_antisymmetry_holds(random_tvform(rng, n, k, rng.randint(0, 2)),
                                     random_tvform(rng, n, k, rng.randint(0, 2)))


@settings(max_examples=25)
@given(seeds)
def test_graded_jacobi(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 2)
    forms = [random_tvform(rng, n, 1, rng.randint(0, 1), density=2) for _ in range(3)]
    assert graded_jacobi_holds(*forms)


@settings(max_examples=30)
@given(seeds)
def test_curvature_closed_form(seed):
    rng = random.Random(seed)
    assert curvature_closed_form_holds(random_linear_connection(rng, rng.randint(1, 3), rng.randint(1, 2)))


@settings(max_examples=20)
@given(seeds)
def test_gauge_conjugation(seed):
    rng = random.Random(seed)
    n, k = rng.randint(1, 2), rng.randint(1, 2)
    assert gauge_conjugation_holds(random_linear_connection(rng, n, k), random_unimodular(rng, n, k))


@settings(max_examples=20)
@given(seeds)
def test_flat_decomposition(seed):
    rng = random.Random(seed)
    n, k = rng.randint(1, 2), rng.randint(1, 2)
    assert alpha_decomposition_holds(random_flat_connection(rng, n, k), random_linear_connection(rng, n, k))


@given(seeds)
def test_unimodular_sampler(seed):
    rng = random.Random(seed)
    S = random_unimodular(rng, 2, 3)
    assert fn.poly_det(S) == Poly.const(S[0, 0].names, 1)

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ewgeom import ewsector as ew
from ewgeom import fnforms as fn
from ewgeom import numbers as nb
from ewgeom.errors import BadAngle, DimensionMismatch, ShapeMismatch, SignatureError, ZeroHiggs
from ewgeom.poly import Poly
from ewgeom.scales import DIMENSIONLESS, length_power
from ewgeom.tetrad import FieldJet, Tetrad

angles = st.floats(0.01, np.pi / 2 - 0.01)
seeds = st.integers(0, 2**32 - 1)
complex2 = st.tuples(*[st.floats(-2, 2)] * 4).map(lambda t: np.array([t[0] + 1j * t[1], t[2] + 1j * t[3]]))
E11, E22, E21, E12 = (ew.elementary(a, b) for a, b in ((0, 0), (1, 1), (1, 0), (0, 1)))


def test_iota_frame_and_metric():
    io = ew.iota_frame()
    assert nb.arrays_equal(io[0], nb.eye(2, nb.EXACT))
    eta2 = nb.exact_array(np.diag([2, -2, -2, -2]))
    assert nb.arrays_equal(ew.iota_metric_table(), eta2)
    assert np.allclose(ew.iota_metric_table(nb.FLOAT), np.diag([2, -2, -2, -2]))


def test_isospin_frame_must_be_orthonormal():
    with pytest.raises(SignatureError):
        ew.IsospinFrame(np.array([[1, 1], [0, 1]], dtype=complex))
    with pytest.raises(ShapeMismatch):
        ew.IsospinFrame(np.eye(3, dtype=complex))


def test_iota_prime_at_quarter_turn():
    assert np.allclose(ew.iota_prime(np.pi / 4), -0.5 * E11, atol=1e-15)


@given(angles)
def test_iota_prime_two_forms_agree(t):
    assert np.max(np.abs(ew.iota_prime(t) - ew.iota_prime_projector_form(t))) < 1e-14


def test_bad_angle():
    for t in (0.0, np.pi / 2, -0.3, 2.0):
        with pytest.raises(BadAngle):
            ew.iota_prime(t)
    with pytest.raises(BadAngle):
        ew.EWGaugeFields(np.zeros(4), np.zeros(4), np.zeros(4), np.pi / 2)


def test_projector_identities():
    for backend in (nb.EXACT, nb.FLOAT):
        res = ew.projector_identities(backend)
        assert res["E11 = (iota0 + iota3)/2"] and res["E22 = (iota0 - iota3)/2"]
        assert res["E21 = (iota1 - i iota2)/2"] and res["E12 = (iota1 + i iota2)/2"]
        assert not res["E11 = (iota1 + iota3)/2"] and not res["E22 = (iota1 - iota3)/2"]
        assert not res["E21 = (iota1 + i iota2)/2"]


# --- Higgs ---------------------------------------------------------------------


def test_potential_at_critical_norm():
    mu, lam = 1.3, 0.7
    hv = ew.HiggsValue(np.array([0, mu]), mu, lam)
    V = ew.higgs_potential(hv)
    assert V.value == pytest.approx(lam * mu**4)
    assert V.dim == length_power(-4)
    st_ = ew.potential_stationary(hv)
    assert st_["dV_ds"] == 0 and st_["d2V_ds2"] < 0 and st_["kind"] == "maximum"
    assert st_["V"].value == pytest.approx(V.value)
    assert ew.higgs_potential(ew.HiggsValue(np.zeros(2), mu, lam)).value == 0


def test_higgs_validation():
    with pytest.raises(ValueError):
        ew.HiggsValue(np.zeros(2), 1.0, 0.0)
    with pytest.raises(ShapeMismatch):
        ew.HiggsValue(np.zeros(3), 1.0, 1.0)
    with pytest.raises(ZeroHiggs):
        ew.higgs_polar(ew.HiggsValue(np.zeros(2), 1.0, 1.0))


def test_higgs_polar_examples():
    f, S = ew.higgs_polar(ew.HiggsValue(np.array([0, 2.0]), 1.0, 1.0))
    assert f.value == pytest.approx(1.0) and np.allclose(S, np.eye(2))
    f, S = ew.higgs_polar(ew.HiggsValue(np.array([1.0, 0]), 1.0, 1.0))
    assert f.value == pytest.approx(0.0)
    assert np.allclose(S @ [0, 1], [1, 0])


@given(complex2)
def test_higgs_polar_properties(phi):
    r = np.linalg.norm(phi)
    if r < 1e-6:
        return
    f, S = ew.higgs_polar(ew.HiggsValue(phi, 0.5, 1.0))
    assert f.value == pytest.approx(r - 0.5)
    assert np.allclose(S.conj().T @ S, np.eye(2), atol=1e-12)
    assert np.linalg.det(S) == pytest.approx(1.0)
    assert np.allclose(S @ [0, r], phi, atol=1e-12)
    # an SU(2) element is fixed by its second column, so S is the only choice
    u = phi / r
    assert np.allclose(ew.su2_element(np.conj(u[1]), -np.conj(u[0])), S, atol=1e-12)


def test_rotate_connection_by_constant_element():
    names = fn.chart_names(2, 2)
    one, zero = Poly.const(names, 1), Poly.zero(names)
    S = np.array([[zero, one], [-one, zero]], dtype=object)
    assert all(p.is_zero() for p in ew.rotate_connection(fn.zero_linear_connection(2, 2), S).coeffs.flat)
    x1 = Poly.var(names, "x1")
    c = np.empty((2, 2, 2), dtype=object)
    for idx in np.ndindex(c.shape):
        c[idx] = zero
    c[0, 0, 0] = x1
    rotated = ew.rotate_connection(fn.LinearConnection(2, 2, c), S)
    assert rotated.matrix(0)[1, 1] == x1 and rotated.matrix(0)[0, 0].is_zero()


# --- gauge fields -----------------------------------------------------------


def test_assemble_examples():
    W = ew.assemble_W(ew.EWGaugeFields(np.array([1.0, 0, 0, 0]), np.zeros(4), np.zeros(4), 0.5))
    assert np.allclose(W[0], E22) and np.allclose(W[1:], 0)
    zero = ew.assemble_W(ew.EWGaugeFields(np.zeros(4), np.zeros(4), np.zeros(4), 0.5))
    assert np.allclose(zero, 0)
    back = ew.extract_fields(zero, 0.5)
    assert np.allclose(back.A, 0) and np.allclose(back.Z, 0) and np.allclose(back.Wp, 0)


@given(seeds, angles)
def test_field_round_trip(seed, t):
    rng = np.random.default_rng(seed)
    f = ew.EWGaugeFields(rng.normal(size=4), rng.normal(size=4), rng.normal(size=4) + 1j * rng.normal(size=4), t)
    W = ew.assemble_W(f)
    assert np.allclose(W, np.conj(np.transpose(W, (0, 2, 1))))
    g = ew.extract_fields(W, t)
    assert np.allclose(g.A, f.A, atol=1e-12) and np.allclose(g.Z, f.Z, atol=1e-12)
    assert np.allclose(g.Wp, f.Wp, atol=1e-12)
    assert np.allclose(ew.from_iota_components(ew.iota_components(W)), W, atol=1e-12)


def test_extract_rejects_non_hermitian():
    W = np.zeros((4, 2, 2), dtype=complex)
    W[0, 0, 1] = 1.0
    with pytest.raises(SignatureError):
        ew.extract_fields(W, 0.5)


def test_sectors():
    assert np.allclose(ew.sector_gram(), np.eye(4))
    # A and Z are not orthogonal: iota' has an E22 component for theta != pi/4
    assert abs(np.trace(E22.conj().T @ ew.iota_prime(0.3))) > 1e-3


def test_hat_w_and_induced_trace():
    W = np.array([np.eye(2)] * 4, dtype=complex)
    assert np.allclose(ew.hat_W(W), 2)
    rng = np.random.default_rng(1)
    f = ew.EWGaugeFields(rng.normal(size=4), rng.normal(size=4), rng.normal(size=4) + 0j, 0.4)
    W = ew.assemble_W(f)
    X, Xhat = ew.induced_connection(W, 2.0)
    assert np.allclose(Xhat, [np.trace(X[a]) for a in range(4)])
    assert np.allclose(Xhat, 2j * ew.hat_W(W))
    traceless = W - np.einsum("l,ij->lij", ew.hat_W(W) / 2, np.eye(2))
    assert np.allclose(ew.induced_connection(traceless, 1.0)[1], 0)


# --- Lagrangian ---------------------------------------------------------------


def test_lagrangian_zero_fields():
    res = ew.ew_lagrangian_point(ew.EWInput(Tetrad(np.eye(4)), FieldJet(np.zeros(2, dtype=complex))))
    assert all(abs(q.value) == 0 for q in res.values())
    assert all(q.dim == DIMENSIONLESS for q in res.values())


def test_lagrangian_higgs_vacuum_value():
    mu, lam = 1.5, 0.25
    res = ew.ew_lagrangian_point(ew.EWInput(Tetrad(np.eye(4)), FieldJet(np.array([0, mu], dtype=complex)),
                                            m=mu, lam=lam))
    assert res["l_phi"].value == pytest.approx(lam * mu**4)


@given(seeds)
def test_interaction_term_is_real(seed):
    rng = np.random.default_rng(seed)
    c = lambda *s: rng.normal(size=s) + 1j * rng.normal(size=s)  # noqa: E731
    res = ew.ew_lagrangian_point(ew.EWInput(
        Tetrad(np.eye(4)), FieldJet(c(2)), FieldJet(c(2), c(4, 2)), FieldJet(c(2, 2), c(4, 2, 2)), m=1.0, lam=0.5,
    ))
    assert abs(res["l_int"].value.imag) < 1e-12
    assert abs(res["l_psi"].value.imag) < 1e-10


def test_audit_default_and_mis_scaled():
    assert all(row["ok"] for row in ew.conformal_weight_audit())
    bad = {row["term"]: row for row in ew.conformal_weight_audit(overrides={"psi": length_power(-1)})}
    assert not bad["l_psi"]["ok"] and bad["l_psi"]["dim"] == length_power(1)
    assert bad["l_phi_kinetic"]["ok"]
    res = ew.ew_lagrangian_point(ew.EWInput(Tetrad(np.eye(4)), FieldJet(np.zeros(2)), dims={"psi": length_power(-1)}))
    assert res["l_psi"].dim == length_power(1)


def test_audit_phi_mismatch_raises():
    with pytest.raises(DimensionMismatch):
        ew.ew_lagrangian_point(ew.EWInput(Tetrad(np.eye(4)), FieldJet(np.zeros(2)), dims={"m": length_power(0)}))


def test_dilaton_term():
    d = np.zeros((4, 4))
    d[0, 1] = 1.0
    q = ew.dilaton_term(FieldJet(np.zeros(4), d), Tetrad(np.eye(4)))
    assert q.value == pytest.approx(-1.0)
    assert q.dim == DIMENSIONLESS


def test_fermion_weights():
    f = ew.FermionValue(np.zeros(2), np.zeros((2, 2)))
    assert f.weights_consistent()
    assert not ew.FermionValue(np.zeros(2), np.zeros((2, 2)), lambda2_power_R=0).weights_consistent()

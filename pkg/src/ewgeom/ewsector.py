"""Electroweak geometry on an isospin bundle I with Hermitian metric h.

Matrices on conj(I) (x) I use the layout ``M[alpha, alphadot]`` in an
h-orthonormal frame (xi_1, xi_2); in that layout the iota-frame is the Pauli
frame, ``xi1bar (x) xi1 = E11`` and ``xi1bar (x) xi2 = E21``.

Connections follow ``nabla s = d s - X s``. Induced on the determinant line
(and on its conjugate, identified with the dual through h) this gives
``nabla phi = d phi - X phi + tr(X) phi`` and ``nabla psi_R = d psi_R + tr(X) psi_R``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import numbers as nb
from . import twospinor as ts
from .cxmulti import HermitianForm
from .errors import BadAngle, DimensionMismatch, ShapeMismatch, SignatureError, SingularTetrad, ZeroHiggs
from .fnforms import LinearConnection, gauge_transform
from .scales import DIMENSIONLESS, ScaleDim, ScaledQuantity, length_power
from .tetrad import ECMD_TERMS, ETA, FACTOR_DIMS, FieldJet, Tetrad, pullback_metric, term_dim

# --- isospin frames and the iota-frame ---------------------------------------


@dataclass(frozen=True)
class IsospinFrame:
    """Columns of ``xi`` are xi_1, xi_2 in some reference basis of I."""

    xi: np.ndarray = field(default_factory=lambda: np.eye(2, dtype=complex))
    h: HermitianForm = None
    tol: float = 1e-12

    def __post_init__(self):
        xi = np.asarray(self.xi)
        if xi.shape != (2, 2):
            raise ShapeMismatch("isospin frame needs two 2-vectors")
        h = self.h if self.h is not None else HermitianForm(nb.eye(2, nb.backend_of(xi)))
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "h", h)
        gram = nb.conj(xi).T @ h.matrix @ xi
        if not nb.arrays_equal(gram, nb.eye(2, nb.backend_of(xi)), 0.0 if xi.dtype == object else self.tol):
            raise SignatureError("frame is not h-orthonormal")

    def to_reference(self, M: np.ndarray) -> np.ndarray:
        """Frame-layout matrix M[alpha, alphadot] as an endomorphism in the reference basis."""
        return self.xi @ M @ nb.conj(self.xi).T @ self.h.matrix


STANDARD_ISOSPIN = IsospinFrame()


def elementary(i: int, j: int, backend: str = nb.FLOAT) -> np.ndarray:
    m = nb.zeros((2, 2), backend)
    m[i, j] = nb.ONE if backend == nb.EXACT else 1.0
    return m


def iota_frame(frame: IsospinFrame = STANDARD_ISOSPIN, backend: str = nb.EXACT) -> list[np.ndarray]:
    """iota_lam = sigma_lam^{alpha alphadot} xibar_alphadot (x) xi_alpha, frame layout."""
    del frame  # components are the same in every h-orthonormal frame
    return ts.pauli_matrices(backend)


def polarized_metric(A, B):
    """Polarisation of 2 det on conj(I) (x) I: tr A tr B - tr(AB)."""
    A, B = np.asarray(A), np.asarray(B)
    return _tr(A) * _tr(B) - _tr(A @ B)


def _tr(M):
    return M[0, 0] + M[1, 1]


def iota_metric_table(backend: str = nb.EXACT) -> np.ndarray:
    io = iota_frame(backend=backend)
    out = nb.zeros((4, 4), backend)
    for i in range(4):
        for j in range(4):
            out[i, j] = polarized_metric(io[i], io[j])
    return out


def _check_angle(theta_w: float) -> None:
    if not 0.0 < theta_w < np.pi / 2:
        raise BadAngle(f"Weinberg angle {theta_w} outside (0, pi/2)")


def iota_prime(theta_w: float) -> np.ndarray:
    """-(sin^2 iota_0 + cos^2 iota_3) / 2."""
    _check_angle(theta_w)
    io = iota_frame(backend=nb.FLOAT)
    s2, c2 = np.sin(theta_w) ** 2, np.cos(theta_w) ** 2
    return -0.5 * (s2 * io[0] + c2 * io[3])


def iota_prime_projector_form(theta_w: float) -> np.ndarray:
    """-E11/2 + cos(2 theta) E22/2, the same element written on the rank-one projectors."""
    _check_angle(theta_w)
    return -0.5 * elementary(0, 0) + 0.5 * np.cos(2 * theta_w) * elementary(1, 1)


def projector_identities(backend: str = nb.EXACT) -> dict[str, bool]:
    """Which expansions of xibar_a (x) xi_a on the iota-frame hold.

    The diagonal projectors need iota_0; look-alike variants with iota_1 and the
    opposite i sign are evaluated too, so a report shows that they do not hold.
    """
    io = iota_frame(backend=backend)
    half = nb.Qi2(Fraction(1, 2)) if backend == nb.EXACT else 0.5
    i = nb.I if backend == nb.EXACT else 1j
    E11, E22, E21, E12 = (elementary(a, b, backend) for a, b in ((0, 0), (1, 1), (1, 0), (0, 1)))
    eq = lambda x, y: nb.arrays_equal(x, y, 1e-15)  # noqa: E731
    return {
        "E11 = (iota0 + iota3)/2": eq(E11, (io[0] + io[3]) * half),
        "E22 = (iota0 - iota3)/2": eq(E22, (io[0] - io[3]) * half),
        "E11 = (iota1 + iota3)/2": eq(E11, (io[1] + io[3]) * half),
        "E22 = (iota1 - iota3)/2": eq(E22, (io[1] - io[3]) * half),
        "E21 = (iota1 - i iota2)/2": eq(E21, (io[1] - io[2] * i) * half),
        "E21 = (iota1 + i iota2)/2": eq(E21, (io[1] + io[2] * i) * half),
        "E12 = (iota1 + i iota2)/2": eq(E12, (io[1] + io[2] * i) * half),
    }


# --- Higgs field ------------------------------------------------------------


@dataclass(frozen=True)
class HiggsValue:
    phi: np.ndarray
    mu: float
    lam: float
    dim: ScaleDim = length_power(-1)
    # power of the conjugate determinant line the field takes values in
    lambda2_conj_power: int = 1

    def __post_init__(self):
        p = np.asarray(self.phi, dtype=complex)
        if p.shape != (2,):
            raise ShapeMismatch("Higgs value has two components")
        object.__setattr__(self, "phi", p)
        if self.lam <= 0 or self.mu <= 0:
            raise ValueError("lambda and mu must be positive")

    @property
    def norm2(self) -> ScaledQuantity:
        return ScaledQuantity(float(np.real(np.vdot(self.phi, self.phi))), self.dim * self.dim)


def higgs_potential(hv: HiggsValue) -> ScaledQuantity:
    """V = lam (2 mu^2 s - s^2) with s = ||phi||^2."""
    s = hv.norm2
    mu2 = hv.mu**2
    v = hv.lam * (2 * mu2 * s.value - s.value**2)
    return ScaledQuantity(v, s.dim * s.dim)


def potential_derivative(s: float, mu: float, lam: float) -> float:
    return lam * (2 * mu * mu - 2 * s)


def potential_stationary(hv: HiggsValue) -> dict:
    """Critical norm s* = mu^2 of V(s); the second derivative -2 lam makes it a maximum in s."""
    s_star = hv.mu**2
    return {
        "s": ScaledQuantity(s_star, length_power(-2)),
        "V": ScaledQuantity(hv.lam * hv.mu**4, length_power(-4)),
        "dV_ds": potential_derivative(s_star, hv.mu, hv.lam),
        "d2V_ds2": -2 * hv.lam,
        "kind": "maximum",
    }


def higgs_polar(hv: HiggsValue) -> tuple[ScaledQuantity, np.ndarray]:
    """(f, S) with f = ||phi|| - mu and S in SU(2) mapping (0, ||phi||) to phi."""
    r = np.sqrt(hv.norm2.value)
    if r == 0:
        raise ZeroHiggs("the polar form needs phi != 0")
    p1, p2 = hv.phi
    S = np.array([[np.conj(p2), p1], [-np.conj(p1), p2]], dtype=complex) / r
    return ScaledQuantity(r - hv.mu, hv.dim), S


def su2_element(a: complex, b: complex) -> np.ndarray:
    """[[a, -conj b], [b, conj a]] for |a|^2 + |b|^2 = 1."""
    return np.array([[a, -np.conj(b)], [b, np.conj(a)]], dtype=complex)


def rotate_connection(X: LinearConnection, S: np.ndarray) -> LinearConnection:
    """X' = S X S^-1 + (dS) S^-1 for a polynomial S with constant determinant."""
    return gauge_transform(X, S)


# --- gauge fields -----------------------------------------------------------


@dataclass(frozen=True)
class EWGaugeFields:
    A: np.ndarray
    Z: np.ndarray
    Wp: np.ndarray
    theta_w: float

    def __post_init__(self):
        _check_angle(self.theta_w)
        A = np.asarray(self.A, dtype=float)
        Z = np.asarray(self.Z, dtype=float)
        Wp = np.asarray(self.Wp, dtype=complex)
        if A.shape != (4,) or Z.shape != (4,) or Wp.shape != (4,):
            raise ShapeMismatch("gauge fields have four components")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "Z", Z)
        object.__setattr__(self, "Wp", Wp)

    @property
    def Wm(self) -> np.ndarray:
        return np.conj(self.Wp)


def assemble_W(fields: EWGaugeFields) -> np.ndarray:
    """W_lam = A E22 + Z iota' + W+ E21 + W- E12, shape (4, 2, 2), Hermitian per lam."""
    ip = iota_prime(fields.theta_w)
    E22, E21, E12 = elementary(1, 1), elementary(1, 0), elementary(0, 1)
    out = np.zeros((4, 2, 2), dtype=complex)
    for lam in range(4):
        out[lam] = fields.A[lam] * E22 + fields.Z[lam] * ip + fields.Wp[lam] * E21 + fields.Wm[lam] * E12
    return out


def iota_components(W: np.ndarray) -> np.ndarray:
    """W^mu_lam with W_lam = W^mu_lam iota_mu, from the 2 eta metric."""
    io = iota_frame(backend=nb.FLOAT)
    out = np.zeros((4, 4), dtype=complex)
    for lam in range(4):
        for mu in range(4):
            out[mu, lam] = 0.5 * ETA[mu, mu] * polarized_metric(io[mu], W[lam])
    return out


def from_iota_components(Wc: np.ndarray) -> np.ndarray:
    io = iota_frame(backend=nb.FLOAT)
    return np.einsum("ml,mij->lij", Wc, np.array(io))


def extract_fields(W: np.ndarray, theta_w: float, tol: float = 1e-12) -> EWGaugeFields:
    """Inverse of assemble_W; W must be Hermitian in each slot."""
    _check_angle(theta_w)
    W = np.asarray(W, dtype=complex)
    if W.shape != (4, 2, 2):
        raise ShapeMismatch("W must have shape (4, 2, 2)")
    if np.max(np.abs(W - np.conj(np.transpose(W, (0, 2, 1))))) > tol * max(1.0, np.max(np.abs(W))):
        raise SignatureError("W is not Hermitian")
    Z = -2 * W[:, 0, 0].real
    A = W[:, 1, 1].real - 0.5 * np.cos(2 * theta_w) * Z
    Wp = W[:, 1, 0]
    return EWGaugeFields(A, Z, Wp, theta_w)


def sector_gram() -> np.ndarray:
    """h-tilde Gram matrix of the rank-one sectors E11, E22, E21, E12."""
    mats = [elementary(0, 0), elementary(1, 1), elementary(1, 0), elementary(0, 1)]
    return np.array([[np.trace(np.conj(a).T @ b) for b in mats] for a in mats])


def hat_W(W: np.ndarray) -> np.ndarray:
    """Components of W-hat: tr W_lam = 2 W^0_lam."""
    return np.array([np.trace(W[lam]) for lam in range(4)])


def induced_connection(W: np.ndarray, q: float, theta: Tetrad | None = None) -> tuple[np.ndarray, np.ndarray]:
    """X_a = i q W^mu_a sigma_mu and its trace X-hat_a = 2 i q W^0_a."""
    Wc = iota_components(W)
    if theta is not None:
        Wc = Wc @ np.asarray(theta.matrix, dtype=float)
    sig = ts.pauli_matrices(nb.FLOAT)
    X = np.zeros((4, 2, 2), dtype=complex)
    for a in range(4):
        for mu in range(4):
            X[a] = X[a] + 1j * q * Wc[mu, a] * sig[mu]
    Xhat = np.array([np.trace(X[a]) for a in range(4)])
    return X, Xhat


# --- fermions and the Lagrangian --------------------------------------------


@dataclass
class FermionValue:
    """psi_R[A] (carrying one inverse determinant-line factor) and psi_L[alpha, Adot]."""

    psiR: np.ndarray
    psiL: np.ndarray
    dim: ScaleDim = length_power(Fraction(-3, 2))
    lambda2_power_R: int = -1
    lambda2_power_L: int = 0

    def __post_init__(self):
        self.psiR = np.asarray(self.psiR, dtype=complex)
        self.psiL = np.asarray(self.psiL, dtype=complex)
        if self.psiR.shape != (2,) or self.psiL.shape != (2, 2):
            raise ShapeMismatch("psi_R has shape (2,), psi_L has shape (2, 2)")

    def weights_consistent(self) -> bool:
        # the right-handed part must carry exactly one inverse power of Lambda^2 I
        return self.lambda2_power_R == -1 and self.lambda2_power_L == 0


EW_TERMS = {
    "l_psi": ("psi", "psi", "theta_inv", "det_theta"),
    "l_phi_kinetic": ("g_inv", "phi", "phi", "det_theta"),
    "l_phi_mass": ("lambda", "m", "m", "phi", "phi", "det_theta"),
    "l_phi_quartic": ("lambda", "phi", "phi", "phi", "phi", "det_theta"),
    "l_X": ("g_inv", "g_inv", "X_curv", "X_curv", "det_theta"),
    "l_int": ("psi", "phi", "psi", "det_theta"),
}

DILATON_TERM = {"l_dilaton": ("g_inv", "g_inv", "dG", "dG", "det_theta")}


def conformal_weight_audit(terms: dict | None = None, overrides: dict | None = None) -> list[dict]:
    """Total scale dimension of every term; ``ok`` is False when not unscaled."""
    if terms is None:
        terms = {**EW_TERMS, **DILATON_TERM, **{f"ecmd_{k}": v for k, v in ECMD_TERMS.items()}}
    out = []
    for name in sorted(terms):
        d = term_dim(terms[name], overrides)
        out.append({"term": name, "factors": list(terms[name]), "dim": d, "ok": d == DIMENSIONLESS})
    return out


def curvature_from_jet(X: FieldJet) -> np.ndarray:
    """R_ab = -d_a X_b + d_b X_a + X_a X_b - X_b X_a for X.value[a] (2x2), X.d[c, a]."""
    v, d = np.asarray(X.value, dtype=complex), np.asarray(X.d, dtype=complex)
    R = np.zeros((4, 4, 2, 2), dtype=complex)
    for a in range(4):
        for b in range(4):
            R[a, b] = -d[a, b] + d[b, a] + v[a] @ v[b] - v[b] @ v[a]
    return R


def soldering_dual(theta: Tetrad) -> np.ndarray:
    """breve-Theta^a_{A Adot} = det(Theta) thetacheck^a_lam (tau^lam)_{A Adot}, shape (4, 2, 2)."""
    det = float(np.real(theta.det))
    inv = np.asarray(theta.inverse(), dtype=complex)
    dual = ts.dual_pauli_basis(nb.FLOAT)
    return det * np.einsum("al,lij->aij", inv, np.array(dual))


@dataclass
class EWInput:
    theta: Tetrad
    phi: FieldJet  # value (2,)
    psiR: FieldJet = None  # value (2,)
    psiL: FieldJet = None  # value (2, 2)
    X: FieldJet = None  # value (4, 2, 2): isospin connection coefficients
    m: float = 0.0
    lam: float = 0.0
    frame: ts.TwoSpinorFrame = ts.STANDARD_FRAME
    dims: dict = field(default_factory=dict)


def _zero_jet(shape) -> FieldJet:
    return FieldJet(np.zeros(shape, dtype=complex))


def ew_lagrangian_point(data: EWInput) -> dict[str, ScaledQuantity]:
    """The four coordinate Lagrangian terms at a point, h-orthonormal isospin frame."""
    th = data.theta
    if not th.invertible:
        raise SingularTetrad("the electroweak Lagrangian needs an invertible tetrad")
    det = float(np.real(th.det))
    g_inv = np.linalg.inv(np.asarray(pullback_metric(th).value, dtype=float))
    X = data.X if data.X is not None else _zero_jet((4, 2, 2))
    Xv = np.asarray(X.value, dtype=complex)
    Xhat = np.array([np.trace(Xv[a]) for a in range(4)])
    psiR = data.psiR if data.psiR is not None else _zero_jet((2,))
    psiL = data.psiL if data.psiL is not None else _zero_jet((2, 2))
    phi = data.phi

    # covariant derivatives
    dphi = np.array([phi.d[a] - Xv[a] @ phi.value + Xhat[a] * phi.value for a in range(4)])
    dR = np.array([psiR.d[a] + Xhat[a] * psiR.value for a in range(4)])
    dL = np.array([psiL.d[a] - Xv[a] @ psiL.value for a in range(4)])

    eu = data.frame.eps_upper(nb.FLOAT)
    breve = soldering_dual(th)
    total = 0j
    for a in range(4):
        right = np.outer(dR[a], np.conj(psiR.value)) - np.outer(psiR.value, np.conj(dR[a]))
        # left block: bar(psi)_{B alpha} nabla psi^alpha_{B'} - nabla bar(psi)_{B alpha} psi^alpha_{B'}
        lb = np.conj(psiL.value).T @ dL[a] - np.conj(dL[a]).T @ psiL.value
        left = eu @ lb @ np.conj(eu).T
        total += np.sum(breve[a] * (right + left))
    l_psi = (1j / np.sqrt(2)) * total

    n2 = float(np.real(np.vdot(phi.value, phi.value)))
    kin = sum(g_inv[a, b] * np.vdot(dphi[a], dphi[b]) for a in range(4) for b in range(4))
    l_phi = (kin + 2 * data.lam * data.m**2 * n2 - data.lam * n2**2) * det

    R = curvature_from_jet(X)
    l_X = -sum(
        g_inv[a, c] * g_inv[b, d] * np.sum(np.conj(R[a, b]) * R[c, d])
        for a in range(4) for b in range(4) for c in range(4) for d in range(4)
        if g_inv[a, c] != 0 and g_inv[b, d] != 0
    ) * det

    pL, pR, pv = psiL.value, psiR.value, phi.value
    t1 = np.einsum("ia,i,a->", np.conj(pL), pv, pR)
    t2 = np.einsum("a,i,ia->", np.conj(pR), np.conj(pv), pL)
    l_int = -(t1 + t2) * det

    dim = lambda name: term_dim(EW_TERMS[name], data.dims)  # noqa: E731
    phi_dim = dim("l_phi_kinetic")
    if {phi_dim, dim("l_phi_mass"), dim("l_phi_quartic")} != {phi_dim}:
        raise DimensionMismatch("terms of l_phi carry different scale dimensions")
    return {
        "l_psi": ScaledQuantity(complex(l_psi), dim("l_psi")),
        "l_phi": ScaledQuantity(complex(l_phi), phi_dim),
        "l_X": ScaledQuantity(complex(l_X), dim("l_X")),
        "l_int": ScaledQuantity(complex(l_int), dim("l_int")),
    }


def dilaton_term(G: FieldJet, theta: Tetrad) -> ScaledQuantity:
    """g^{ac} g^{bd} d_a G_b d_c G_d det(Theta) for a dimensionless G, jet d[a, b] = d_a G_b."""
    g_inv = np.linalg.inv(np.asarray(pullback_metric(theta).value, dtype=float))
    d = np.asarray(G.d, dtype=float)
    val = np.einsum("ac,bd,ab,cd->", g_inv, g_inv, d, d) * float(np.real(theta.det))
    return ScaledQuantity(float(val), term_dim(DILATON_TERM["l_dilaton"]))


__all__ = [
    "IsospinFrame",
    "STANDARD_ISOSPIN",
    "elementary",
    "iota_frame",
    "polarized_metric",
    "iota_metric_table",
    "iota_prime",
    "iota_prime_projector_form",
    "projector_identities",
    "HiggsValue",
    "higgs_potential",
    "potential_derivative",
    "potential_stationary",
    "higgs_polar",
    "su2_element",
    "rotate_connection",
    "EWGaugeFields",
    "assemble_W",
    "iota_components",
    "from_iota_components",
    "extract_fields",
    "sector_gram",
    "hat_W",
    "induced_connection",
    "FermionValue",
    "EW_TERMS",
    "DILATON_TERM",
    "conformal_weight_audit",
    "curvature_from_jet",
    "soldering_dual",
    "EWInput",
    "ew_lagrangian_point",
    "dilaton_term",
    "FACTOR_DIMS",
]

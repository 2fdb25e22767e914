"""Soldering forms, the induced density contraction, mass shells and ECMD terms.

A tetrad is the 4x4 matrix ``theta[lam, a]`` of a map TM -> L (x) H written
in the Pauli basis. Form indices ``a`` are chart directions; fiber indices
``lam`` are Pauli-frame directions with metric diag(1, -1, -1, -1).

``theta_breve`` uses the fiber volume form with ``eta_{0123} = +1`` and the
normalisation ``1/(4-r)!``, so for r = 1 it equals ``det(theta) * tr(theta^-1 xi)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import factorial

import numpy as np

from . import numbers as nb
from . import twospinor as ts
from .errors import DimensionMismatch, MasslessShell, ShapeMismatch, SingularTetrad
from .scales import DIMENSIONLESS, ScaleDim, ScaledQuantity, length_power

ETA = np.diag([1.0, -1.0, -1.0, -1.0])


def _perm_sign(p) -> int:
    p = list(p)
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


_LEVI = {p: _perm_sign(p) for p in permutations(range(4))}


@dataclass(frozen=True)
class Tetrad:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if m.shape != (4, 4):
            raise ShapeMismatch("tetrad must be 4x4")
        object.__setattr__(self, "matrix", m)

    @property
    def det(self):
        m = self.matrix
        if m.dtype == object:
            return _det_object(m)
        return float(np.linalg.det(m.astype(float)))

    @property
    def invertible(self) -> bool:
        d = self.det
        return d != 0 if self.matrix.dtype == object else abs(d) > 1e-14

    def inverse(self) -> np.ndarray:
        """theta-check[a, lam], the inverse morphism."""
        if not self.invertible:
            raise SingularTetrad("tetrad is not invertible")
        m = self.matrix
        if m.dtype == object:
            from .cxmulti import exact_inverse

            return exact_inverse(nb.exact_array(m))
        return np.linalg.inv(m.astype(float))


def _det_object(m):
    total = 0
    for p, s in _LEVI.items():
        term = s
        for i in range(4):
            term = term * m[p[i], i]
        total = total + term
    return total


def pullback_metric(theta: Tetrad) -> ScaledQuantity:
    """(Theta* g)_ab = g_{lam mu} Theta^lam_a Theta^mu_b, scaled by L^2."""
    m = theta.matrix
    eta = ETA if m.dtype != object else np.diag([1, -1, -1, -1]).astype(object)
    return ScaledQuantity(m.T @ eta @ m, length_power(2))


def det_theta(theta: Tetrad) -> ScaledQuantity:
    return ScaledQuantity(theta.det, length_power(4))


def theta_breve(theta: Tetrad, xi: np.ndarray, r: int, xi_dim: ScaleDim = DIMENSIONLESS) -> ScaledQuantity:
    """Coefficient of d^4x in (1/(4-r)!) Theta^(4-r) ^ xi contracted with eta.

    ``xi`` has shape (4,)*r + (4,)*r: fiber indices first, then form indices,
    antisymmetric in each group.
    """
    if r not in (1, 2, 3):
        raise ShapeMismatch("r must be 1, 2 or 3")
    xi = np.asarray(xi)
    if xi.shape != (4,) * (2 * r):
        raise ShapeMismatch(f"xi must have shape {(4,) * (2 * r)}")
    th = theta.matrix
    s = 4 - r
    total = 0
    for a, sa in _LEVI.items():
        for lam, sl in _LEVI.items():
            coef = sa * sl
            for i in range(s):
                coef = coef * th[lam[i], a[i]]
            total = total + coef * xi[tuple(lam[s:]) + tuple(a[s:])]
    value = total * Fraction(1, factorial(s)) if th.dtype == object and xi.dtype == object else total / factorial(s)
    return ScaledQuantity(value, length_power(s) * xi_dim)


def theta_column_form(theta: Tetrad) -> np.ndarray:
    """Theta itself as an H-valued 1-form xi[lam, a]."""
    return np.asarray(theta.matrix)


# --- mass shells -------------------------------------------------------------


@dataclass(frozen=True)
class MassShellPoint:
    p: np.ndarray
    m: float
    tol: float = 1e-9

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        object.__setattr__(self, "p", p)
        if self.m < 0:
            raise ValueError("mass must be non-negative")
        norm = p @ ETA @ p
        if abs(norm - self.m**2) > self.tol * max(1.0, self.m**2, float(p @ p)):
            raise ValueError("covector is not on the mass shell")
        if p[0] <= 0:
            raise ValueError("covector is not future-oriented")


def slash(p_up, basis: str = "dirac") -> np.ndarray:
    """gamma[p] = p^lam gamma_lam for contravariant components p^lam."""
    gam = ts.gamma_dirac(backend=nb.FLOAT) if basis == "dirac" else ts.gamma_weyl(backend=nb.FLOAT)
    return sum(p_up[i] * gam[i] for i in range(4))


def mass_shell_projectors(pt: MassShellPoint, basis: str = "dirac") -> tuple[np.ndarray, np.ndarray]:
    """P(+/-) = (Id +/- gamma[p#]/m)/2."""
    if pt.m == 0:
        raise MasslessShell("the electron/positron split needs m > 0")
    g = slash(ETA @ pt.p, basis)
    eye = np.eye(4, dtype=complex)
    return (eye + g / pt.m) / 2, (eye - g / pt.m) / 2


def random_on_shell(rng: np.random.Generator, m: float, spread: float = 3.0) -> MassShellPoint:
    vec = rng.normal(scale=spread, size=3)
    e = np.sqrt(m * m + vec @ vec)
    return MassShellPoint(np.concatenate([[e], -vec]), m)


# --- QED interaction --------------------------------------------------------


def interaction_contraction(phi: ts.DiracSpinor, A, psi: ts.DiracSpinor):
    """<l_int, phibar (x) A (x) psi> = -k(phi, gamma[A] psi)."""
    gA = ts.dirac_map(np.asarray(A))
    image = ts.DiracSpinor.from_weyl(gA @ psi.weyl())
    return -ts.k_form(phi, image)


def interaction_tensor(backend: str = nb.FLOAT) -> np.ndarray:
    """T[i, lam, j] = -k(e_i, gamma(tau_lam) e_j) in the Weyl basis."""
    km = ts.k_matrix(backend)
    gam = ts.gamma_weyl(backend=backend)
    out = nb.zeros((4, 4, 4), backend)
    for lam in range(4):
        out[:, lam, :] = -(km @ gam[lam])
    return out


def _index_maps(backend):
    km = ts.k_matrix(backend)
    eta = ts.lorentz_metric(backend)
    if backend == nb.EXACT:
        from .cxmulti import exact_inverse

        return km, exact_inverse(km), eta, exact_inverse(eta)
    return km, np.linalg.inv(km), eta, np.linalg.inv(eta)


def raise_pattern(T: np.ndarray, pattern: tuple[bool, bool, bool]) -> np.ndarray:
    """Raise the chosen slots of T[i, lam, j] with k# (spinor slots) or g# (vector slot).

    The first spinor slot is conjugate-linear, so it is raised with the
    transpose of k#.
    """
    backend = nb.backend_of(T)
    _k, kinv, _eta, etainv = _index_maps(backend)
    out = T
    if pattern[0]:
        out = np.einsum("pi,ilj->plj", kinv.T, out) if backend == nb.FLOAT else _obj_einsum(kinv.T, out, 0)
    if pattern[1]:
        out = np.einsum("ml,ilj->imj", etainv, out) if backend == nb.FLOAT else _obj_einsum(etainv, out, 1)
    if pattern[2]:
        out = np.einsum("ilp,pj->ilj", out, kinv) if backend == nb.FLOAT else _obj_einsum(kinv.T, out, 2)
    return out


def lower_pattern(T: np.ndarray, pattern: tuple[bool, bool, bool]) -> np.ndarray:
    backend = nb.backend_of(T)
    k, _kinv, eta, _etainv = _index_maps(backend)
    out = T
    if pattern[0]:
        out = np.einsum("pi,ilj->plj", k.T, out) if backend == nb.FLOAT else _obj_einsum(k.T, out, 0)
    if pattern[1]:
        out = np.einsum("ml,ilj->imj", eta, out) if backend == nb.FLOAT else _obj_einsum(eta, out, 1)
    if pattern[2]:
        out = np.einsum("ilp,pj->ilj", out, k) if backend == nb.FLOAT else _obj_einsum(k.T, out, 2)
    return out


def _obj_einsum(M, T, axis):
    moved = np.moveaxis(T, axis, 0)
    res = np.tensordot(M, moved, axes=([1], [0]))
    return np.moveaxis(res, 0, axis)


ALL_PATTERNS = tuple(product((False, True), repeat=3))


# --- ECMD Lagrangian --------------------------------------------------------


@dataclass
class FieldJet:
    """Value and first partial derivatives d[c] = d_c value at one chart point."""

    value: np.ndarray
    d: np.ndarray = None

    def __post_init__(self):
        v = np.asarray(self.value)
        self.value = v
        if self.d is None:
            self.d = np.zeros((4,) + v.shape, dtype=v.dtype if v.dtype != object else complex)
        else:
            self.d = np.asarray(self.d)
        if self.d.shape != (4,) + v.shape:
            raise ShapeMismatch(f"derivatives must have shape {(4,) + v.shape}")


# scale dimensions of the factors that Lagrangian terms are built from
FACTOR_DIMS = {
    "psi": length_power(Fraction(-3, 2)),
    "phi": length_power(-1),
    "m": length_power(-1),
    "g": length_power(2),
    "g_inv": length_power(-2),
    "eta": length_power(4),
    "theta": length_power(1),
    "theta_inv": length_power(-1),
    "det_theta": length_power(4),
    "G": DIMENSIONLESS,
    "dG": DIMENSIONLESS,
    "F_form": DIMENSIONLESS,
    "F": length_power(-2),
    "dY": DIMENSIONLESS,
    "R": DIMENSIONLESS,
    "X_curv": DIMENSIONLESS,
    "grav_inv": length_power(-2),
    "lambda": DIMENSIONLESS,
    "breve2": length_power(2),
}

ECMD_TERMS = {
    "l_g": ("grav_inv", "breve2", "R"),
    "l_em_quadratic": ("F", "F", "eta"),
    "l_em_cross": ("dY", "F", "breve2"),
    "l_D_kinetic": ("psi", "psi", "theta_inv", "det_theta"),
    "l_D_mass": ("m", "psi", "psi", "det_theta"),
}


def term_dim(factors, overrides: dict | None = None) -> ScaleDim:
    dims = dict(FACTOR_DIMS)
    if overrides:
        dims.update(overrides)
    total = DIMENSIONLESS
    for f in factors:
        total = total * dims[f]
    return total


def _dirac_cov(psi: FieldJet, Y: FieldJet | None, spin_conn) -> np.ndarray:
    """nabla_a psi = d_a psi - i Y_a psi - Gamma~_a psi, Weyl components."""
    out = np.array(psi.d, dtype=complex)
    for a in range(4):
        if Y is not None:
            out[a] = out[a] - 1j * Y.value[a] * psi.value
        if spin_conn is not None:
            out[a] = out[a] - np.asarray(spin_conn[a]) @ psi.value
    return out


def _kw(phi_w, psi_w):
    return ts.k_form(ts.DiracSpinor.from_weyl(phi_w), ts.DiracSpinor.from_weyl(psi_w))


def dirac_one_form(theta: Tetrad, psi_w, dpsi) -> np.ndarray:
    """xi[lam, a] = eta^{lam mu} k(psi, gamma_mu nabla_a psi)."""
    gam = ts.gamma_weyl(backend=nb.FLOAT)
    xi = np.zeros((4, 4), dtype=complex)
    for mu in range(4):
        for a in range(4):
            xi[mu, a] = ETA[mu, mu] * _kw(psi_w, gam[mu] @ dpsi[a])
    return xi


@dataclass
class ECMDInput:
    theta: Tetrad
    curvature: np.ndarray = None  # R[lam, mu, a, b] of the spinor connection
    Y: FieldJet = None
    F: np.ndarray = None  # F^{lam mu}, antisymmetric
    psi: FieldJet = None  # Weyl components
    m: float = 0.0
    grav: float = 1.0
    spin_connection: np.ndarray = None
    dims: dict = field(default_factory=dict)


def ecmd_lagrangian_point(data: ECMDInput) -> dict[str, ScaledQuantity]:
    """Pointwise l_g, l_em and l_D, each with its audited scale dimension."""
    th = data.theta
    det = float(np.real(th.det))
    dims = lambda name: term_dim(ECMD_TERMS[name], data.dims)  # noqa: E731

    R = np.zeros((4, 4, 4, 4)) if data.curvature is None else np.asarray(data.curvature)
    l_g = theta_breve(th, R, 2).value / data.grav

    F = np.zeros((4, 4)) if data.F is None else np.asarray(data.F, dtype=float)
    Flow = ETA @ F @ ETA
    f2 = float(np.sum(F * Flow))
    if data.Y is not None:
        dY = (np.asarray(data.Y.d, dtype=float) - np.asarray(data.Y.d, dtype=float).T) / 2
    else:
        dY = np.zeros((4, 4))
    xi = np.einsum("lm,ab->lmab", F, dY)
    cross = theta_breve(th, xi, 2).value
    l_em_q = 0.25 * f2 * det
    l_em_c = -0.5 * cross

    if data.psi is not None:
        psi_w = np.asarray(data.psi.value, dtype=complex)
        if not th.invertible:
            raise SingularTetrad("the Dirac term needs an invertible tetrad")
        dpsi = _dirac_cov(data.psi, data.Y, data.spin_connection)
        xi1 = dirac_one_form(th, psi_w, dpsi)
        a_term = theta_breve(th, xi1, 1).value
        # <nabla psibar, psi> is the complex conjugate of <psibar, nabla psi>
        kin = (1j / np.sqrt(2)) * (a_term - np.conj(a_term))
        mass = -data.m * _kw(psi_w, psi_w) * det
        l_d_kin, l_d_mass = float(np.real(kin)), float(np.real(mass))
    else:
        l_d_kin = l_d_mass = 0.0

    return {
        "l_g": ScaledQuantity(float(np.real(l_g)), dims("l_g")),
        "l_em": ScaledQuantity(l_em_q + l_em_c, _common(dims("l_em_quadratic"), dims("l_em_cross"))),
        "l_D": ScaledQuantity(l_d_kin + l_d_mass, _common(dims("l_D_kinetic"), dims("l_D_mass"))),
    }


def _common(*ds: ScaleDim) -> ScaleDim:
    """Dimension of a sum of terms; mixing dimensions is an error."""
    for d in ds[1:]:
        if d != ds[0]:
            raise DimensionMismatch(f"summands carry {ds[0]} and {d}")
    return ds[0]


__all__ = [
    "ETA",
    "Tetrad",
    "pullback_metric",
    "det_theta",
    "theta_breve",
    "theta_column_form",
    "MassShellPoint",
    "slash",
    "mass_shell_projectors",
    "random_on_shell",
    "interaction_contraction",
    "interaction_tensor",
    "raise_pattern",
    "lower_pattern",
    "ALL_PATTERNS",
    "FieldJet",
    "FACTOR_DIMS",
    "ECMD_TERMS",
    "term_dim",
    "dirac_one_form",
    "ECMDInput",
    "ecmd_lagrangian_point",
]

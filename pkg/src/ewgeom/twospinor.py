"""Two-spinor algebra: epsilon structure, Lorentz metric, Dirac map and friends.

Spinors are plain length-2 arrays in a fixed frame of U. A Dirac spinor is a
pair ``(u, chi)`` with ``u`` in U and ``chi`` in the dual of conj(U). The
Weyl basis is ``(zeta_1, zeta_2, -zbar^1, -zbar^2)``, so the Weyl coordinates
of ``(u, chi)`` are ``(u_1, u_2, -chi_1, -chi_2)``.

Pinned signs: ``eps_sharp(eps_flat(u)) = -u`` and ``C(C(psi)) = -psi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import numbers as nb
from .cxmulti import HermitianForm, exact_det, exact_inverse, signature
from .errors import NotTimelike, SignatureError

FLAT_SHARP_SIGN = -1
CHARGE_CONJ_SQUARE = -1


def _arr(x, backend=None):
    a = np.asarray(x)
    if backend == nb.EXACT and a.dtype != object:
        return nb.exact_array(a)
    if backend == nb.FLOAT and a.dtype == object:
        return nb.to_float(a)
    return a


def _const(value: nb.Qi2, backend: str):
    return value if backend == nb.EXACT else complex(value)


def _sqrt2(backend: str):
    return _const(nb.SQRT2, backend)


@dataclass(frozen=True)
class TwoSpinorFrame:
    """A frame of U together with the phase of epsilon_12 in it."""

    phase: object = nb.ONE
    label: str = "standard"

    def __post_init__(self):
        p = self.phase
        if isinstance(p, nb.Qi2):
            if not (p * p.conjugate() - 1).is_zero():
                raise ValueError("epsilon phase must have unit modulus")
        else:
            p = complex(p)
            if abs(abs(p) - 1.0) > 1e-12:
                raise ValueError("epsilon phase must have unit modulus")
            object.__setattr__(self, "phase", p)

    @property
    def backend(self) -> str:
        return nb.EXACT if isinstance(self.phase, nb.Qi2) else nb.FLOAT

    def eps_lower(self, backend: str | None = None) -> np.ndarray:
        """Matrix eps_{AB}."""
        p = self._phase_in(backend)
        return _antisym(p, backend or self.backend)

    def eps_upper(self, backend: str | None = None) -> np.ndarray:
        """Matrix eps^{AB}, normalised so that eps^{12} = conj(eps_{12})."""
        p = self._phase_in(backend)
        pc = p.conjugate() if isinstance(p, nb.Qi2) else np.conj(p)
        return _antisym(pc, backend or self.backend)

    def _phase_in(self, backend):
        backend = backend or self.backend
        if backend == nb.EXACT:
            if not isinstance(self.phase, nb.Qi2):
                raise nb.BackendMismatch("float phase cannot feed the exact backend")
            return self.phase
        return complex(self.phase)


def _antisym(p, backend):
    m = nb.zeros((2, 2), backend)
    m[0, 1] = p
    m[1, 0] = -p
    return m


STANDARD_FRAME = TwoSpinorFrame()


def eps_flat(u, frame: TwoSpinorFrame = STANDARD_FRAME) -> np.ndarray:
    """(u flat)_B = eps_{AB} u^A."""
    u = np.asarray(u)
    return u @ frame.eps_lower(nb.backend_of(u))


def eps_sharp(lam, frame: TwoSpinorFrame = STANDARD_FRAME) -> np.ndarray:
    """(lam sharp)^B = eps^{AB} lam_A."""
    lam = np.asarray(lam)
    return lam @ frame.eps_upper(nb.backend_of(lam))


def eps_bar_flat(ubar, frame: TwoSpinorFrame = STANDARD_FRAME) -> np.ndarray:
    """Conjugate-space version, using conj(eps_{AB})."""
    ubar = np.asarray(ubar)
    return ubar @ nb.conj(frame.eps_lower(nb.backend_of(ubar)))


def spinor_metric(w1, w2, frame: TwoSpinorFrame = STANDARD_FRAME):
    """g(w1, w2) = eps_{AB} conj(eps)_{A'B'} w1^{AA'} w2^{BB'}."""
    w1 = np.asarray(w1)
    w2 = np.asarray(w2)
    backend = nb.same_backend(w1, w2)
    e = frame.eps_lower(backend)
    eb = nb.conj(e)
    # sum_{A,B,A',B'} e[A,B] eb[A',B'] w1[A,A'] w2[B,B'] = tr(e^T w1 eb w2^T)
    m = e.T @ w1 @ eb @ w2.T
    return m[0, 0] + m[1, 1]


@dataclass(frozen=True)
class HermitianVector:
    """Element w^{AA'} of H(U (x) conj U), stored as a 2x2 Hermitian matrix."""

    components: np.ndarray
    tol: float = 1e-12

    def __post_init__(self):
        c = np.asarray(self.components)
        if c.shape != (2, 2):
            raise SignatureError("Hermitian vector needs a 2x2 matrix")
        if not nb.arrays_equal(c, nb.conj(c).T, 0.0 if c.dtype == object else self.tol):
            raise SignatureError("matrix is not Hermitian")
        object.__setattr__(self, "components", c)


def pauli_matrices(backend: str = nb.EXACT) -> list[np.ndarray]:
    rows = [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ]
    if backend == nb.EXACT:
        return [nb.exact_array([[nb.gaussian(int(v.real), int(v.imag)) for v in r] for r in np.array(m, complex)]) for m in rows]
    return [np.array(m, dtype=complex) for m in rows]


def pauli_basis(frame: TwoSpinorFrame = STANDARD_FRAME, backend: str | None = None) -> list[np.ndarray]:
    """tau_lambda = sigma_lambda / sqrt2; orthonormal for spinor_metric."""
    backend = backend or frame.backend
    s = _const(nb.INV_SQRT2, backend)
    return [m * s for m in pauli_matrices(backend)]


def dual_pauli_basis(backend: str = nb.EXACT) -> list[np.ndarray]:
    """Covectors tau^lambda with tau^lambda(tau_mu) = delta, as matrices [A, A']."""
    s = _const(nb.INV_SQRT2, backend)
    return [nb.conj(m) * s for m in pauli_matrices(backend)]


def lorentz_metric(backend: str = nb.EXACT) -> np.ndarray:
    m = nb.zeros((4, 4), backend)
    one = nb.ONE if backend == nb.EXACT else 1.0
    for i in range(4):
        m[i, i] = one if i == 0 else -one
    return m


def metric_table(frame: TwoSpinorFrame = STANDARD_FRAME, backend: str | None = None) -> np.ndarray:
    basis = pauli_basis(frame, backend)
    backend = nb.backend_of(basis[0])
    out = nb.zeros((4, 4), backend)
    for i in range(4):
        for j in range(4):
            out[i, j] = spinor_metric(basis[i], basis[j], frame)
    return out


# --- Dirac spinors ---------------------------------------------------------


@dataclass(frozen=True)
class DiracSpinor:
    """(u, chi) in U (+) dual(conj U)."""

    u: np.ndarray
    chi: np.ndarray

    def __post_init__(self):
        u, chi = np.asarray(self.u), np.asarray(self.chi)
        if u.shape != (2,) or chi.shape != (2,):
            raise SignatureError("Dirac spinor parts must have two components each")
        nb.same_backend(u, chi)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "chi", chi)

    @property
    def backend(self) -> str:
        return nb.backend_of(self.u)

    def weyl(self) -> np.ndarray:
        """Components in the Weyl basis."""
        return np.concatenate([self.u, -self.chi])

    @classmethod
    def from_weyl(cls, psi) -> "DiracSpinor":
        psi = np.asarray(psi)
        return cls(psi[:2], -psi[2:])


def _apply_dirac(y: np.ndarray, psi: DiracSpinor, frame: TwoSpinorFrame) -> DiracSpinor:
    backend = nb.same_backend(y, psi.u)
    r2 = _sqrt2(backend)
    e = frame.eps_lower(backend)
    eb = nb.conj(e)
    u_part = (y @ psi.chi) * r2
    # chi'_{B'} = sqrt2 eps_{AB} conj(eps)_{A'B'} y^{AA'} u^B
    chi_part = ((e @ psi.u) @ y @ eb) * r2
    return DiracSpinor(u_part, chi_part)


def dirac_map(y, frame: TwoSpinorFrame = STANDARD_FRAME) -> np.ndarray:
    """4x4 matrix of the Clifford map gamma[y] on W, in the Weyl basis."""
    y = np.asarray(y)
    backend = nb.backend_of(y)
    out = nb.zeros((4, 4), backend)
    basis = nb.eye(4, backend)
    for col in range(4):
        img = _apply_dirac(y, DiracSpinor.from_weyl(basis[:, col]), frame)
        out[:, col] = img.weyl()
    return out


def gamma_weyl(frame: TwoSpinorFrame = STANDARD_FRAME, backend: str | None = None) -> list[np.ndarray]:
    backend = backend or frame.backend
    if backend == nb.FLOAT and frame.backend == nb.EXACT:
        # constant tables: evaluate exactly, round once
        return [g.copy() for g in _rounded_gammas(frame, "weyl")]
    return [dirac_map(t, frame) for t in pauli_basis(frame, backend)]


def weyl_to_dirac_matrix(backend: str = nb.EXACT) -> np.ndarray:
    """Columns are the Dirac basis vectors in Weyl coordinates."""
    s = _const(nb.INV_SQRT2, backend)
    one = nb.ONE if backend == nb.EXACT else 1.0
    b = nb.zeros((4, 4), backend)
    for i in range(2):
        b[i, i] = one * s
        b[i + 2, i] = -one * s
        b[i, i + 2] = one * s
        b[i + 2, i + 2] = one * s
    return b


def change_basis_weyl_dirac(psi, direction: str = "to_dirac") -> np.ndarray:
    """Convert Weyl-basis components to Dirac-basis components or back."""
    if isinstance(psi, DiracSpinor):
        psi = psi.weyl()
    psi = np.asarray(psi)
    b = weyl_to_dirac_matrix(nb.backend_of(psi))
    if direction == "to_dirac":
        return b.T @ psi  # b is orthogonal
    if direction == "to_weyl":
        return b @ psi
    raise ValueError(f"unknown direction {direction!r}")


def gamma_dirac(frame: TwoSpinorFrame = STANDARD_FRAME, backend: str | None = None) -> list[np.ndarray]:
    backend = backend or frame.backend
    if backend == nb.FLOAT and frame.backend == nb.EXACT:
        return [g.copy() for g in _rounded_gammas(frame, "dirac")]
    gw = gamma_weyl(frame, backend)
    b = weyl_to_dirac_matrix(backend)
    return [b.T @ g @ b for g in gw]


@lru_cache(maxsize=None)
def _rounded_gammas(frame: TwoSpinorFrame, basis: str) -> tuple[np.ndarray, ...]:
    exact = gamma_weyl(frame, nb.EXACT) if basis == "weyl" else gamma_dirac(frame, nb.EXACT)
    return tuple(nb.to_float(g) for g in exact)


def reference_gammas(basis: str = "weyl", backend: str = nb.EXACT) -> list[np.ndarray]:
    """Textbook gamma matrices with lowered index, gamma_lam = eta_{lam mu} gamma^mu, from 2x2 blocks.

    Dirac: gamma_0 = diag(I, -I); Weyl: gamma_0 = -[[0, I], [I, 0]]; both have
    gamma_k = [[0, -sigma_k], [sigma_k, 0]].
    """
    sig = pauli_matrices(backend)
    z = nb.zeros((2, 2), backend)
    block = lambda a, b, c, d: np.block([[a, b], [c, d]])  # noqa: E731
    if basis == "dirac":
        g0 = block(sig[0], z, z, -sig[0])
    elif basis == "weyl":
        g0 = block(z, -sig[0], -sig[0], z)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return [g0] + [block(z, -sig[k], sig[k], z) for k in (1, 2, 3)]


def dirac_adjoint(psi: DiracSpinor) -> tuple[np.ndarray, np.ndarray]:
    """(u, chi) -> (conj chi, conj u), an element of dual(U) (+) conj(U)."""
    return nb.conj(psi.chi), nb.conj(psi.u)


def k_form(phi: DiracSpinor, psi: DiracSpinor):
    """Dirac adjunction pairing k(phi, psi) = <adjoint(phi), psi>."""
    lam, vbar = dirac_adjoint(phi)
    return lam @ psi.u + vbar @ psi.chi


def k_matrix(backend: str = nb.EXACT) -> np.ndarray:
    """Matrix of k in the Weyl basis: k(phi, psi) = conj(phi_w)^T K psi_w."""
    out = nb.zeros((4, 4), backend)
    basis = nb.eye(4, backend)
    for i in range(4):
        for j in range(4):
            out[i, j] = k_form(DiracSpinor.from_weyl(basis[:, i]), DiracSpinor.from_weyl(basis[:, j]))
    return out


def charge_conjugation(psi: DiracSpinor, frame: TwoSpinorFrame = STANDARD_FRAME) -> DiracSpinor:
    """C(u, chi) = (eps_sharp(conj chi), conj-eps_flat(conj u)); antilinear."""
    return DiracSpinor(eps_sharp(nb.conj(psi.chi), frame), eps_bar_flat(nb.conj(psi.u), frame))


def charge_conjugation_matrix(frame: TwoSpinorFrame = STANDARD_FRAME, backend: str | None = None) -> np.ndarray:
    """M with C(psi)_w = M conj(psi_w) in the Weyl basis."""
    backend = backend or frame.backend
    out = nb.zeros((4, 4), backend)
    basis = nb.eye(4, backend)
    for col in range(4):
        out[:, col] = charge_conjugation(DiracSpinor.from_weyl(basis[:, col]), frame).weyl()
    return out


def _observer_norm2(o: np.ndarray, frame: TwoSpinorFrame):
    g = spinor_metric(o, o, frame)
    tr = o[0, 0] + o[1, 1]
    if isinstance(g, nb.Qi2):
        if g.sign() <= 0 or tr.sign() <= 0:
            raise NotTimelike("observer must be timelike and future-pointing")
    elif g.real <= 0 or tr.real <= 0:
        raise NotTimelike("observer must be timelike and future-pointing")
    return g


def observer_metric(o, frame: TwoSpinorFrame = STANDARD_FRAME) -> HermitianForm:
    """Hermitian metric on U from lowering both indices of o with eps (x) conj eps."""
    o = HermitianVector(np.asarray(o)).components
    _observer_norm2(o, frame)
    e = frame.eps_lower(nb.backend_of(o))
    # h_{A A'} = eps_{BA} conj(eps)_{B'A'} o^{BB'}
    low = e.T @ o @ nb.conj(e)
    return HermitianForm(low.T)


def parity(o, frame: TwoSpinorFrame = STANDARD_FRAME) -> np.ndarray:
    """gamma of the unit observer; squares to the identity."""
    o = HermitianVector(np.asarray(o)).components
    g = _observer_norm2(o, frame)
    if isinstance(g, nb.Qi2):
        unit = o * (1 / g.sqrt())
    else:
        unit = o / np.sqrt(g.real)
    return dirac_map(unit, frame)


def time_reversal(psi: DiracSpinor, o, frame: TwoSpinorFrame = STANDARD_FRAME) -> DiracSpinor:
    """Parity composed with charge conjugation."""
    return DiracSpinor.from_weyl(parity(o, frame) @ charge_conjugation(psi, frame).weyl())


def k_signature(backend: str = nb.EXACT) -> tuple[int, int, int]:
    return signature(HermitianForm(k_matrix(backend)))


def is_null(w, frame: TwoSpinorFrame = STANDARD_FRAME, tol: float = 1e-12) -> bool:
    w = np.asarray(w)
    g = spinor_metric(w, w, frame)
    return g.is_zero() if isinstance(g, nb.Qi2) else abs(g) <= tol


def det2(w):
    w = np.asarray(w)
    return exact_det(w) if w.dtype == object else np.linalg.det(w)


__all__ = [
    "TwoSpinorFrame",
    "STANDARD_FRAME",
    "HermitianVector",
    "DiracSpinor",
    "eps_flat",
    "eps_sharp",
    "eps_bar_flat",
    "spinor_metric",
    "pauli_matrices",
    "pauli_basis",
    "dual_pauli_basis",
    "lorentz_metric",
    "metric_table",
    "dirac_map",
    "gamma_weyl",
    "gamma_dirac",
    "reference_gammas",
    "weyl_to_dirac_matrix",
    "change_basis_weyl_dirac",
    "dirac_adjoint",
    "k_form",
    "k_matrix",
    "k_signature",
    "charge_conjugation",
    "charge_conjugation_matrix",
    "observer_metric",
    "parity",
    "time_reversal",
    "is_null",
    "det2",
    "exact_inverse",
]

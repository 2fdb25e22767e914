"""Matrix Lie algebras of anti-Hermitian endomorphisms and charged gauge fields.

Structure constants follow ``[l_h, l_j] = c[h, j, k] l_k``. Charged curvature
uses unit-weight antisymmetrisation, ``dX_ab = d_a X_b - d_b X_a``, which is
what makes it agree with the curvature of the line-bundle connection
``gamma_a = q X_a`` computed by :mod:`ewgeom.fnforms`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import numbers as nb
from .cxmulti import HermitianForm, exact_inverse, trace
from .errors import DependentGenerators, NotClosed, ShapeMismatch, SignatureError, ZeroCharge
from .poly import Poly


def _mat(x):
    return np.asarray(x)


def killing_like(X, Y):
    """K(X, Y) = -2 Tr(X Y); positive definite on anti-Hermitian matrices."""
    X, Y = _mat(X), _mat(Y)
    nb.same_backend(X, Y)
    if X.shape != Y.shape or X.shape[0] != X.shape[1]:
        raise ShapeMismatch("K needs square matrices of equal size")
    return trace(X @ Y) * -2


def _commutator(A, B):
    return A @ B - B @ A


def ad_matrix(A) -> np.ndarray:
    """Matrix of X -> [A, X] on gl(n), in the basis of elementary matrices (row-major)."""
    A = _mat(A)
    n = A.shape[0]
    backend = nb.backend_of(A)
    out = nb.zeros((n * n, n * n), backend)
    for col in range(n * n):
        E = nb.zeros((n, n), backend)
        E[col // n, col % n] = nb.ONE if backend == nb.EXACT else 1.0
        out[:, col] = _commutator(A, E).reshape(-1)
    return out


def killing_true(A, B):
    """Killing form Tr(ad_A ad_B) of gl(n), from the adjoint representation."""
    return trace(ad_matrix(A) @ ad_matrix(B))


def killing_gl_closed_form(A, B):
    """2n Tr(AB) - 2 Tr A Tr B, the closed form of killing_true on gl(n)."""
    A, B = _mat(A), _mat(B)
    n = A.shape[0]
    return trace(A @ B) * (2 * n) - trace(A) * trace(B) * 2


def killing_single_trace_product(A, B):
    """2n Tr(AB) - Tr A Tr B, with a single trace product; differs from killing_true unless Tr A Tr B = 0."""
    A, B = _mat(A), _mat(B)
    n = A.shape[0]
    return trace(A @ B) * (2 * n) - trace(A) * trace(B)


def is_anti_hermitian(X, h: HermitianForm | None = None, tol: float = 1e-12) -> bool:
    """X^dagger h = -h X, i.e. h(conj X u, v) = -h(conj u, X v)."""
    X = _mat(X)
    hm = nb.eye(X.shape[0], nb.backend_of(X)) if h is None else h.matrix
    lhs = nb.conj(X).T @ hm + hm @ X
    return nb.is_zero_array(lhs, 0.0 if X.dtype == object else tol)


@dataclass(frozen=True)
class LieFrame:
    """K-orthonormal frame of anti-Hermitian generators."""

    generators: tuple
    h: HermitianForm | None = None

    @property
    def backend(self) -> str:
        return nb.backend_of(self.generators[0])

    @property
    def size(self) -> int:
        return len(self.generators)

    def gram(self) -> np.ndarray:
        m = self.size
        out = nb.zeros((m, m), self.backend)
        for i in range(m):
            for j in range(m):
                out[i, j] = killing_like(self.generators[i], self.generators[j])
        return out


def orthonormalize(generators: Sequence, h: HermitianForm | None = None, tol: float = 1e-10) -> LieFrame:
    """Gram-Schmidt with respect to K. Exact inputs need exact square roots."""
    gens = [_mat(g) for g in generators]
    if not gens:
        raise DependentGenerators("no generators given")
    backend = nb.same_backend(*gens)
    for g in gens:
        if not is_anti_hermitian(g, h):
            raise SignatureError("generator is not anti-Hermitian")
    out: list[np.ndarray] = []
    scale = max((float(np.max(np.abs(nb.to_float(g)))) for g in gens), default=1.0) or 1.0
    for g in gens:
        v = g
        for e in out:
            v = v - e * killing_like(e, v)
        norm2 = killing_like(v, v)
        if backend == nb.EXACT:
            if norm2.is_zero():
                raise DependentGenerators("generators are linearly dependent")
            try:
                norm = norm2.sqrt()
            except ValueError as exc:
                raise ValueError(f"{exc}; K-norm has no exact square root, use the float backend") from None
            v = v * (1 / norm)
        else:
            n2 = float(np.real(norm2))
            if n2 <= (tol * scale) ** 2:
                raise DependentGenerators("generators are linearly dependent")
            v = v / np.sqrt(n2)
        out.append(v)
    return LieFrame(tuple(out), h)


def structure_constants(frame: LieFrame, tol: float = 1e-10) -> np.ndarray:
    """Table c[h, j, k] with [l_h, l_j] = c[h, j, k] l_k."""
    gens = frame.generators
    m = frame.size
    backend = frame.backend
    c = nb.zeros((m, m, m), backend)
    scale = max(float(np.max(np.abs(nb.to_float(g)))) for g in gens) or 1.0
    for h in range(m):
        for j in range(m):
            comm = _commutator(gens[h], gens[j])
            resid = comm
            for k in range(m):
                c[h, j, k] = killing_like(gens[k], comm)
                resid = resid - gens[k] * c[h, j, k]
            exact = backend == nb.EXACT
            if not nb.is_zero_array(resid, 0.0 if exact else tol * scale * scale):
                raise NotClosed(f"[l_{h}, l_{j}] leaves the span of the frame")
    if backend == nb.EXACT:
        return _rationalize(c)
    return c.real if np.allclose(c.imag, 0, atol=tol) else c


def _rationalize(c: np.ndarray) -> np.ndarray:
    """Exact structure constants of anti-Hermitian frames are real; return Fractions when rational."""
    if all(v.is_rational() for v in c.flat):
        out = np.empty(c.shape, dtype=object)
        for idx, v in np.ndenumerate(c):
            out[idx] = v.to_fraction()
        return out
    return c


def su2_generators(backend: str = nb.EXACT) -> list[np.ndarray]:
    """i sigma_1, i sigma_2, i sigma_3."""
    from .twospinor import pauli_matrices

    i = nb.I if backend == nb.EXACT else 1j
    return [m * i for m in pauli_matrices(backend)[1:]]


def u2_generators(backend: str = nb.EXACT) -> list[np.ndarray]:
    from .twospinor import pauli_matrices

    i = nb.I if backend == nb.EXACT else 1j
    return [m * i for m in pauli_matrices(backend)]


def levi_civita3() -> np.ndarray:
    eps = np.zeros((3, 3, 3), dtype=int)
    for (a, b, c), s in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)):
        eps[a, b, c] = s
    return eps


# --- charged fields ---------------------------------------------------------


@dataclass
class ChargedField:
    """Real field strengths X[a][i] (Polys on the base chart) with charge q."""

    q: object
    X: list

    def __post_init__(self):
        if not self.X or any(len(row) != len(self.X[0]) for row in self.X):
            raise ShapeMismatch("X must be a rectangular table base index x frame index")

    @property
    def n(self) -> int:
        return len(self.X)

    @property
    def m(self) -> int:
        return len(self.X[0])

    @property
    def names(self) -> tuple[str, ...]:
        return self.X[0][0].names


def charged_curvature(f: ChargedField, c) -> np.ndarray:
    """R[a, b, i] = -q (d_a X_b - d_b X_a)^i + q^2 X_a^h X_b^j c[h, j, i]."""
    c = np.asarray(c, dtype=object)
    n, m = f.n, f.m
    if c.shape != (m, m, m):
        raise ShapeMismatch("structure constants do not match the frame size")
    q = f.q
    out = np.empty((n, n, m), dtype=object)
    zero = Poly.zero(f.names)
    for a in range(n):
        for b in range(n):
            for i in range(m):
                lin = f.X[b][i].diff(a) - f.X[a][i].diff(b)
                quad = zero
                for h in range(m):
                    if f.X[a][h].is_zero():
                        continue
                    for j in range(m):
                        if c[h, j, i] != 0:
                            quad = quad + f.X[a][h] * f.X[b][j] * c[h, j, i]
                out[a, b, i] = lin * (-q) + quad * (q * q)
    return out


def gauge_lagrangian(f: ChargedField, R: np.ndarray, g_inv) -> Poly:
    """l[X] = -(1/2q^2) g^{ac} g^{bd} sum_i R_ab^i R_cd^i (K-orthonormal frame)."""
    if f.q == 0:
        raise ZeroCharge("the gauge Lagrangian needs q != 0")
    total = _contract_rr(R, g_inv, f.names)
    return total * (Fraction(-1, 2) / (f.q * f.q))


def _contract_rr(R, g_inv, names) -> Poly:
    g_inv = np.asarray(g_inv, dtype=object)
    n = R.shape[0]
    total = Poly.zero(names)
    for a in range(n):
        for c in range(n):
            if g_inv[a, c] == 0:
                continue
            for b in range(n):
                for d in range(n):
                    if g_inv[b, d] == 0:
                        continue
                    coef = g_inv[a, c] * g_inv[b, d]
                    for i in range(R.shape[2]):
                        if not R[a, b, i].is_zero() and not R[c, d, i].is_zero():
                            total = total + R[a, b, i] * R[c, d, i] * coef
    return total


def lagrangian_q_expansion(f: ChargedField, c, g_inv) -> dict[int, Poly]:
    """l[X] as a polynomial in q: returns {power: coefficient Poly on the base chart}.

    q is adjoined as an extra variable; R/q = -dX + q [X, X] is formed so the
    1/q^2 prefactor cancels symbolically.
    """
    names = f.names + ("q",)
    qv = Poly.var(names, "q")
    X = [[p.embed(names) for p in row] for row in f.X]
    m = f.m
    no_c = np.full((m, m, m), 0, dtype=object)
    unit = ChargedField(Fraction(1), X)
    lin = charged_curvature(unit, no_c)  # -dX
    quad = charged_curvature(unit, c) - lin  # X X c
    R_over_q = lin + quad * qv
    total = _contract_rr(R_over_q, g_inv, names) * Fraction(-1, 2)
    qi = names.index("q")
    out = {}
    for p in range(total.degree_in(qi) + 1):
        coeff = total.coefficient_in(qi, p)
        if not coeff.is_zero():
            out[p] = _drop_var(coeff, qi, f.names)
    return out


def _drop_var(p: Poly, index: int, names: tuple[str, ...]) -> Poly:
    return Poly(names, {e[:index] + e[index + 1:]: v for e, v in p.terms.items()})


def charge_power(Y: Sequence, p: int) -> list:
    """Coefficients of the induced connection on the p-th tensor power: p Y_a."""
    return [y * p for y in Y]


def line_bundle_connection(Y: Sequence[Poly], k_names) -> "object":
    """Linear connection gamma_a = Y_a on a line bundle, on the chart with one fiber variable."""
    from .fnforms import LinearConnection

    n = len(Y)
    coeffs = np.empty((n, 1, 1), dtype=object)
    for a in range(n):
        coeffs[a, 0, 0] = Y[a].embed(k_names)
    return LinearConnection(n, 1, coeffs)


def matrix_connection(f: ChargedField, frame: LieFrame):
    """Linear connection gamma_a = q X_a^i l_i with exact frame matrices as Poly coefficients."""
    from .fnforms import LinearConnection, chart_names

    k = frame.generators[0].shape[0]
    names = chart_names(f.n, k)
    coeffs = np.empty((f.n, k, k), dtype=object)
    for a in range(f.n):
        for r in range(k):
            for s in range(k):
                acc = Poly.zero(names)
                for i in range(f.m):
                    entry = frame.generators[i][r, s]
                    if not (entry.is_zero() if isinstance(entry, nb.Qi2) else entry == 0):
                        acc = acc + f.X[a][i].embed(names) * entry
                coeffs[a, r, s] = acc * f.q
    return LinearConnection(f.n, k, coeffs)


def frame_curvature_matrices(R: np.ndarray, frame: LieFrame, names) -> np.ndarray:
    """Matrix curvature R_ab^i l_i, entries as Polys on the chart ``names``."""
    n, m = R.shape[0], R.shape[2]
    k = frame.generators[0].shape[0]
    out = np.empty((n, n, k, k), dtype=object)
    for a in range(n):
        for b in range(n):
            for r in range(k):
                for s in range(k):
                    acc = Poly.zero(names)
                    for i in range(m):
                        entry = frame.generators[i][r, s]
                        if not entry.is_zero():
                            acc = acc + R[a, b, i].embed(names) * entry
                    out[a, b, r, s] = acc
    return out


def h_contract_half_k(X, Y):
    """1/2 K(X, Y), the value the h-contraction takes on anti-Hermitian pairs."""
    return killing_like(X, Y) * (nb.Qi2(Fraction(1, 2)) if _mat(X).dtype == object else 0.5)


__all__ = [
    "killing_like",
    "frame_curvature_matrices",
    "killing_true",
    "killing_gl_closed_form",
    "killing_single_trace_product",
    "ad_matrix",
    "is_anti_hermitian",
    "LieFrame",
    "orthonormalize",
    "structure_constants",
    "su2_generators",
    "u2_generators",
    "levi_civita3",
    "ChargedField",
    "charged_curvature",
    "gauge_lagrangian",
    "lagrangian_q_expansion",
    "charge_power",
    "line_bundle_connection",
    "matrix_connection",
    "h_contract_half_k",
    "exact_inverse",
]

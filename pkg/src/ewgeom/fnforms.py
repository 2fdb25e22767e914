"""Tangent-valued forms on a fibered chart R^n x R^k and their FN bracket.

Chart variables are ``x1..xn`` (base) followed by ``y1..yk`` (fiber); a
form index or value index ``b`` runs over all n+k directions, base first.

Component convention: an r-form is ``sum over all index tuples`` of
``phi^b_{a1..ar} dx^{a1} ^ ... ^ dx^{ar} (x) d_b`` with ``phi`` totally
antisymmetric, so the coefficient on the basis element ``dx^I`` (I
increasing) is ``r! * phi^b_I``. Only increasing tuples are stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterator, Sequence

import numpy as np

from .errors import ChartMismatch, NonConstantDeterminant, ShapeMismatch
from .poly import Poly


def chart_names(n: int, k: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n)) + tuple(f"y{i + 1}" for i in range(k))


def sort_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting ``idx`` (0 on repeats) and the sorted tuple."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, tuple(sorted(idx))
    sign = 1
    # bubble-count inversions; tuples are tiny
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


def _block_splits(J: tuple[int, ...], sizes: Sequence[int]) -> Iterator[tuple[int, list[tuple[int, ...]]]]:
    """Ordered partitions of the increasing tuple J into blocks of the given sizes.

    Yields (sign of the shuffle permutation, blocks), blocks kept increasing.
    """
    if not sizes:
        yield 1, []
        return
    first, rest = sizes[0], sizes[1:]
    for pick in combinations(range(len(J)), first):
        block = tuple(J[i] for i in pick)
        remaining = tuple(J[i] for i in range(len(J)) if i not in pick)
        # shuffle sign: moving the picked positions to the front
        inv = sum(p - i for i, p in enumerate(pick))
        s0 = -1 if inv % 2 else 1
        for s1, blocks in _block_splits(remaining, rest):
            yield s0 * s1, [block] + blocks


@dataclass
class TVForm:
    """Tangent-valued r-form with polynomial components ``comps[(I, b)]``."""

    n: int
    k: int
    r: int
    comps: dict = field(default_factory=dict)

    def __post_init__(self):
        names = self.names
        clean = {}
        for (I, b), p in self.comps.items():
            I = tuple(I)
            if len(I) != self.r or list(I) != sorted(set(I)):
                raise ShapeMismatch(f"index tuple {I} is not increasing of length {self.r}")
            if not 0 <= b < self.dim or any(not 0 <= a < self.dim for a in I):
                raise ShapeMismatch("index out of range")
            if p.names != names:
                raise ChartMismatch("component polynomial lives on a different chart")
            if not p.is_zero():
                clean[(I, b)] = p
        self.comps = clean

    @property
    def dim(self) -> int:
        return self.n + self.k

    @property
    def names(self) -> tuple[str, ...]:
        return chart_names(self.n, self.k)

    def zero_poly(self) -> Poly:
        return Poly.zero(self.names)

    def get(self, idx: Sequence[int], b: int) -> Poly:
        """Component at an arbitrary (not necessarily sorted) index tuple."""
        s, key = sort_sign(idx)
        if s == 0:
            return self.zero_poly()
        p = self.comps.get((key, b))
        if p is None:
            return self.zero_poly()
        return p if s > 0 else -p

    def is_zero(self) -> bool:
        return not self.comps

    def __add__(self, other: "TVForm") -> "TVForm":
        _check_same(self, other)
        out = dict(self.comps)
        for key, p in other.comps.items():
            out[key] = out[key] + p if key in out else p
        return TVForm(self.n, self.k, self.r, out)

    def __neg__(self) -> "TVForm":
        return TVForm(self.n, self.k, self.r, {key: -p for key, p in self.comps.items()})

    def __sub__(self, other: "TVForm") -> "TVForm":
        return self + (-other)

    def scale(self, c) -> "TVForm":
        return TVForm(self.n, self.k, self.r, {key: p * c for key, p in self.comps.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TVForm):
            return NotImplemented
        return (self.n, self.k, self.r) == (other.n, other.k, other.r) and (self - other).is_zero()

    # --- structural flags --------------------------------------------------
    def is_basic(self) -> bool:
        """All form legs are base directions."""
        return all(a < self.n for (I, _b) in self.comps for a in I)

    def is_vertical_valued(self) -> bool:
        return all(b >= self.n for (_I, b) in self.comps)

    def is_projectable(self) -> bool:
        """Base-valued components are basic and depend on base coordinates only."""
        for (I, b), p in self.comps.items():
            if b < self.n and (any(a >= self.n for a in I) or any(p.depends_on(self.n + j) for j in range(self.k))):
                return False
        return True

    def is_linear(self) -> bool:
        """Projectable, with fiber-valued components linear homogeneous in y."""
        if not self.is_projectable():
            return False
        for (I, b), p in self.comps.items():
            if b >= self.n:
                if any(a >= self.n for a in I):
                    return False
                for e in p.terms:
                    if sum(e[self.n:]) != 1:
                        return False
        return True


def _check_same(a: TVForm, b: TVForm) -> None:
    if (a.n, a.k) != (b.n, b.k):
        raise ChartMismatch(f"chart ({a.n},{a.k}) vs ({b.n},{b.k})")
    if a.r != b.r:
        raise ShapeMismatch("degrees differ")


def vector_field(n: int, k: int, comps: Sequence[Poly]) -> TVForm:
    return TVForm(n, k, 0, {((), b): p for b, p in enumerate(comps)})


def fn_bracket(phi: TVForm, psi: TVForm) -> TVForm:
    """Frolicher-Nijenhuis bracket via the four-term coordinate formula.

    The formula is evaluated on each split of the output indices into blocks
    and antisymmetrised with unit weight (1/(r+s)! over all permutations).
    """
    if (phi.n, phi.k) != (psi.n, psi.k):
        raise ChartMismatch(f"chart ({phi.n},{phi.k}) vs ({psi.n},{psi.k})")
    n, k, r, s = phi.n, phi.k, phi.r, psi.r
    N = n + k
    deg = r + s
    zero = phi.zero_poly()
    out: dict = {}
    if deg > N:
        return TVForm(n, k, deg, {})
    # precompute derivatives lazily
    dcache: dict = {}

    def d(form, idx, b, c):
        key = (id(form), idx, b, c)
        if key not in dcache:
            dcache[key] = form.get(idx, b).diff(c)
        return dcache[key]

    sign_rs = -1 if (r * s) % 2 else 1
    norm = Fraction(1, factorial(deg))
    for J in combinations(range(N), deg):
        for b in range(N):
            total = zero
            # phi^c_A d_c psi^b_B and -(-1)^{rs} psi^c_B d_c phi^b_A
            w = factorial(r) * factorial(s)
            for sg, (A, B) in _block_splits(J, [r, s]):
                acc = zero
                for c in range(N):
                    pc = phi.get(A, c)
                    if not pc.is_zero():
                        acc = acc + pc * d(psi, B, b, c)
                sub = zero
                for c in range(N):
                    qc = psi.get(B, c)
                    if not qc.is_zero():
                        sub = sub + qc * d(phi, A, b, c)
                # the second term's natural index order is (B, A): reorder to (A, B)
                acc = acc - sub * (sign_rs * _swap_sign(s, r))
                if not acc.is_zero():
                    total = total + acc * (sg * w)
            # -r phi^b_{A c} d_{a} psi^c_B
            if r >= 1:
                w = factorial(r - 1) * factorial(s)
                for sg, (A, a, B) in _block_splits(J, [r - 1, 1, s]):
                    acc = zero
                    for c in range(N):
                        pb = phi.get(A + (c,), b)
                        if not pb.is_zero():
                            acc = acc + pb * d(psi, B, c, a[0])
                    if not acc.is_zero():
                        total = total - acc * (r * sg * w)
            # +(-1)^{rs} s psi^b_{B c} d_{a} phi^c_A, written in index order (B, a, A)
            if s >= 1:
                w = factorial(s - 1) * factorial(r)
                for sg, (B, a, A) in _block_splits(J, [s - 1, 1, r]):
                    acc = zero
                    for c in range(N):
                        qb = psi.get(B + (c,), b)
                        if not qb.is_zero():
                            acc = acc + qb * d(phi, A, c, a[0])
                    if not acc.is_zero():
                        total = total + acc * (sign_rs * s * sg * w)
            if not total.is_zero():
                out[(J, b)] = total * norm
    return TVForm(n, k, deg, out)


def _swap_sign(p: int, q: int) -> int:
    """Sign relating blocks (B, A) with |B|=p, |A|=q to the order (A, B)."""
    return -1 if (p * q) % 2 else 1


def lie_bracket(u: TVForm, v: TVForm) -> TVForm:
    """[u, v]^b = u^c d_c v^b - v^c d_c u^b, computed directly from components."""
    if u.r or v.r:
        raise ShapeMismatch("Lie bracket needs vector fields")
    if (u.n, u.k) != (v.n, v.k):
        raise ChartMismatch(f"chart ({u.n},{u.k}) vs ({v.n},{v.k})")
    N = u.dim
    comps = []
    for b in range(N):
        acc = u.zero_poly()
        for c in range(N):
            acc = acc + u.get((), c) * v.get((), b).diff(c) - v.get((), c) * u.get((), b).diff(c)
        comps.append(acc)
    return vector_field(u.n, u.k, comps)


# --- connections -------------------------------------------------------------


@dataclass
class Connection:
    """Connection dx^a (x) (d_{x^a} + gamma_a^i d_{y^i}); ``gamma[a][i]`` is a Poly."""

    n: int
    k: int
    gamma: list

    def __post_init__(self):
        if len(self.gamma) != self.n or any(len(row) != self.k for row in self.gamma):
            raise ShapeMismatch("gamma table must be n x k")

    def to_tvform(self) -> TVForm:
        names = chart_names(self.n, self.k)
        one = Poly.const(names, 1)
        comps = {}
        for a in range(self.n):
            comps[((a,), a)] = one
            for i in range(self.k):
                comps[((a,), self.n + i)] = self.gamma[a][i]
        return TVForm(self.n, self.k, 1, comps)


@dataclass
class LinearConnection:
    """Linear connection with coefficient table ``coeffs[a][i][j]`` (Polys in x only).

    The induced covariant derivative is d_a s - gamma_a s.
    """

    n: int
    k: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=object)
        if c.shape != (self.n, self.k, self.k):
            raise ShapeMismatch(f"coefficient table has shape {c.shape}")
        names = chart_names(self.n, self.k)
        for p in c.flat:
            if p.names != names:
                raise ChartMismatch("coefficient polynomial lives on a different chart")
            if any(p.depends_on(self.n + j) for j in range(self.k)):
                raise ShapeMismatch("linear connection coefficients must depend on x only")
        self.coeffs = c

    @property
    def names(self) -> tuple[str, ...]:
        return chart_names(self.n, self.k)

    def matrix(self, a: int) -> np.ndarray:
        return self.coeffs[a]

    def to_connection(self) -> Connection:
        ys = [Poly.var(self.names, self.n + j) for j in range(self.k)]
        gamma = []
        for a in range(self.n):
            row = []
            for i in range(self.k):
                acc = Poly.zero(self.names)
                for j in range(self.k):
                    acc = acc + self.coeffs[a, i, j] * ys[j]
                row.append(acc)
            gamma.append(row)
        return Connection(self.n, self.k, gamma)

    def to_tvform(self) -> TVForm:
        return self.to_connection().to_tvform()


def zero_linear_connection(n: int, k: int) -> LinearConnection:
    names = chart_names(n, k)
    c = np.empty((n, k, k), dtype=object)
    for idx in np.ndindex(c.shape):
        c[idx] = Poly.zero(names)
    return LinearConnection(n, k, c)


def _as_tvform(g) -> TVForm:
    return g if isinstance(g, TVForm) else g.to_tvform()


def curvature(gamma) -> TVForm:
    """R = -[gamma, gamma] (vertical-valued, basic 2-form for projectable gamma)."""
    g = _as_tvform(gamma)
    return -fn_bracket(g, g)


def poly_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    n, m = A.shape[0], B.shape[1]
    names = A.flat[0].names
    out = np.empty((n, m), dtype=object)
    for i in range(n):
        for j in range(m):
            acc = Poly.zero(names)
            for h in range(A.shape[1]):
                if not A[i, h].is_zero() and not B[h, j].is_zero():
                    acc = acc + A[i, h] * B[h, j]
            out[i, j] = acc
    return out


def _poly_diff_matrix(A: np.ndarray, var: int) -> np.ndarray:
    out = np.empty(A.shape, dtype=object)
    for idx in np.ndindex(A.shape):
        out[idx] = A[idx].diff(var)
    return out


def linear_curvature_table(gamma: LinearConnection) -> np.ndarray:
    """Closed form R_ab = -d_a g_b + d_b g_a + g_a g_b - g_b g_a, shape (n, n, k, k)."""
    n, k = gamma.n, gamma.k
    out = np.empty((n, n, k, k), dtype=object)
    for a in range(n):
        for b in range(n):
            Ga, Gb = gamma.matrix(a), gamma.matrix(b)
            t = _poly_diff_matrix(Ga, b) - _poly_diff_matrix(Gb, a) + poly_matmul(Ga, Gb) - poly_matmul(Gb, Ga)
            out[a, b] = t
    return out


def curvature_table_from_form(R: TVForm) -> np.ndarray:
    """Read R_ab^i_j off a linear curvature form (coefficient of y^j in R^{y^i}_{ab})."""
    n, k = R.n, R.k
    out = np.empty((n, n, k, k), dtype=object)
    for a in range(n):
        for b in range(n):
            for i in range(k):
                comp = R.get((a, b), n + i)
                for j in range(k):
                    out[a, b, i, j] = comp.coefficient_in(n + j, 1)
                if any(sum(e[n:]) != 1 for e in comp.terms):
                    raise ShapeMismatch("curvature is not linear in the fiber coordinates")
    return out


def covariant_differential(gamma, s: Sequence[Poly]) -> list[list[Poly]]:
    """nabla_a s^i = d_a s^i - gamma_a^i(x, s(x)) for a section y = s(x)."""
    conn = gamma.to_connection() if isinstance(gamma, LinearConnection) else gamma
    if len(s) != conn.k:
        raise ShapeMismatch(f"section has {len(s)} components, fiber has {conn.k}")
    subs = {conn.n + j: s[j] for j in range(conn.k)}
    out = []
    for a in range(conn.n):
        out.append([s[i].diff(a) - conn.gamma[a][i].substitute(subs) for i in range(conn.k)])
    return out


# --- gauge transformations ---------------------------------------------------


def poly_det(S: np.ndarray) -> Poly:
    """Determinant by cofactor expansion (matrices here are at most 8x8 and sparse)."""
    m = S.shape[0]
    if m == 1:
        return S[0, 0]
    total = Poly.zero(S[0, 0].names)
    for j in range(m):
        if S[0, j].is_zero():
            continue
        minor = np.delete(np.delete(S, 0, axis=0), j, axis=1)
        term = S[0, j] * poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def poly_inverse(S: np.ndarray) -> np.ndarray:
    """Inverse of a polynomial matrix with constant nonzero determinant."""
    S = np.asarray(S, dtype=object)
    det = poly_det(S)
    if det.is_zero() or not det.is_constant():
        raise NonConstantDeterminant(f"det S = {det!r} is not a nonzero constant")
    m = S.shape[0]
    inv_det = 1 / det.constant_value()
    out = np.empty((m, m), dtype=object)
    for i in range(m):
        for j in range(m):
            if m == 1:
                cof = Poly.const(S[0, 0].names, 1)
            else:
                minor = np.delete(np.delete(S, j, axis=0), i, axis=1)
                cof = poly_det(minor)
            out[i, j] = cof * inv_det if (i + j) % 2 == 0 else -cof * inv_det
    return out


def gauge_transform(gamma: LinearConnection, S: np.ndarray) -> LinearConnection:
    """gamma'_a = S gamma_a S^-1 + (d_a S) S^-1, so that R' = S R S^-1."""
    S = np.asarray(S, dtype=object)
    if S.shape != (gamma.k, gamma.k):
        raise ShapeMismatch("S must be k x k")
    Sinv = poly_inverse(S)
    out = np.empty(gamma.coeffs.shape, dtype=object)
    for a in range(gamma.n):
        out[a] = poly_matmul(poly_matmul(S, gamma.matrix(a)), Sinv) + poly_matmul(_poly_diff_matrix(S, a), Sinv)
    return LinearConnection(gamma.n, gamma.k, out)


def conjugate_table(R: np.ndarray, S: np.ndarray) -> np.ndarray:
    """Apply R_ab -> S R_ab S^-1 to a curvature table of shape (n, n, k, k)."""
    Sinv = poly_inverse(S)
    out = np.empty(R.shape, dtype=object)
    for a in range(R.shape[0]):
        for b in range(R.shape[1]):
            out[a, b] = poly_matmul(poly_matmul(S, R[a, b]), Sinv)
    return out


def decompose_alpha(gamma, gamma0) -> TVForm:
    """Difference tensor alpha = gamma - gamma0 (basic, vertical-valued 1-form)."""
    return _as_tvform(gamma) - _as_tvform(gamma0)


def reconstruct(gamma0, alpha: TVForm) -> TVForm:
    return _as_tvform(gamma0) + alpha


def curvature_via_alpha(gamma0, alpha: TVForm) -> TVForm:
    """-[g0,g0] - 2[g0,alpha] - [alpha,alpha]; the first term drops when g0 is flat."""
    g0 = _as_tvform(gamma0)
    return -fn_bracket(g0, g0) - fn_bracket(g0, alpha).scale(2) - fn_bracket(alpha, alpha)

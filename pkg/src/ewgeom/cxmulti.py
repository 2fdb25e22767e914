"""Index-typed complex tensors, the dagger involution and Hermitian forms.

Four index kinds appear: ``vec`` (V), ``dual`` (V*), ``conj`` (conjugate
space) and ``conjdual``. Dotted (conjugate) indices only contract with
dotted ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from . import numbers as nb
from .errors import DegenerateMetric, SignatureError


class IndexKind(str, Enum):
    VEC = "vec"
    DUAL = "dual"
    CONJ = "conj"
    CONJDUAL = "conjdual"

    @property
    def dotted(self) -> bool:
        return self in (IndexKind.CONJ, IndexKind.CONJDUAL)

    @property
    def conjugate(self) -> "IndexKind":
        return _CONJ_OF[self]


_CONJ_OF = {
    IndexKind.VEC: IndexKind.CONJ,
    IndexKind.CONJ: IndexKind.VEC,
    IndexKind.DUAL: IndexKind.CONJDUAL,
    IndexKind.CONJDUAL: IndexKind.DUAL,
}

_PAIRS = {
    frozenset((IndexKind.VEC, IndexKind.DUAL)),
    frozenset((IndexKind.CONJ, IndexKind.CONJDUAL)),
}


def can_contract(a: IndexKind, b: IndexKind) -> bool:
    return frozenset((a, b)) in _PAIRS


@dataclass(frozen=True)
class MixedTensor:
    kinds: tuple[IndexKind, ...]
    components: np.ndarray

    def __post_init__(self):
        kinds = tuple(IndexKind(k) for k in self.kinds)
        object.__setattr__(self, "kinds", kinds)
        comps = np.asarray(self.components)
        if comps.ndim != len(kinds):
            raise SignatureError(f"{len(kinds)} index kinds for a rank-{comps.ndim} array")
        object.__setattr__(self, "components", comps)

    @property
    def backend(self) -> str:
        return nb.backend_of(self.components)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.components.shape

    def __add__(self, other: "MixedTensor") -> "MixedTensor":
        _require_same_kinds(self, other)
        nb.same_backend(self.components, other.components)
        return MixedTensor(self.kinds, self.components + other.components)

    def __sub__(self, other: "MixedTensor") -> "MixedTensor":
        _require_same_kinds(self, other)
        nb.same_backend(self.components, other.components)
        return MixedTensor(self.kinds, self.components - other.components)

    def scale(self, a) -> "MixedTensor":
        return MixedTensor(self.kinds, self.components * a)

    def conjugate(self) -> "MixedTensor":
        """Complex conjugate; swaps dotted and undotted index kinds."""
        return MixedTensor(tuple(k.conjugate for k in self.kinds), nb.conj(self.components))


def _require_same_kinds(a: MixedTensor, b: MixedTensor) -> None:
    if a.kinds != b.kinds or a.shape != b.shape:
        raise SignatureError("tensor signatures differ")


def vv_bar(matrix, backend: str | None = None) -> MixedTensor:
    """Wrap an n x n array as an element of V (x) conj(V)."""
    arr = np.asarray(matrix)
    if backend == nb.EXACT and arr.dtype != object:
        arr = nb.exact_array(arr)
    return MixedTensor((IndexKind.VEC, IndexKind.CONJ), arr)


def contract(t: MixedTensor, i: int, u: MixedTensor, j: int) -> MixedTensor:
    """Contract index i of t with index j of u (only legal kind pairs)."""
    if not can_contract(t.kinds[i], u.kinds[j]):
        raise SignatureError(f"cannot contract {t.kinds[i].value} with {u.kinds[j].value}")
    if t.shape[i] != u.shape[j]:
        raise SignatureError("contracted index sizes differ")
    nb.same_backend(t.components, u.components)
    comps = np.tensordot(t.components, u.components, axes=([i], [j]))
    kinds = t.kinds[:i] + t.kinds[i + 1:] + u.kinds[:j] + u.kinds[j + 1:]
    if not kinds:
        return comps
    return MixedTensor(kinds, comps)


def _check_vvbar(w: MixedTensor) -> None:
    if w.kinds != (IndexKind.VEC, IndexKind.CONJ) or w.shape[0] != w.shape[1]:
        raise SignatureError("expected a tensor in V (x) conj(V)")


def dagger(w: MixedTensor) -> MixedTensor:
    """(u (x) conj v)^dagger = v (x) conj u, i.e. the conjugate transpose."""
    _check_vvbar(w)
    return MixedTensor(w.kinds, nb.conj(w.components).T)


def hermitian_split(w: MixedTensor) -> tuple[MixedTensor, MixedTensor]:
    _check_vvbar(w)
    wd = dagger(w)
    half = nb.Qi2(1, 0) / 2 if w.backend == nb.EXACT else 0.5
    return (w + wd).scale(half), (w - wd).scale(half)


@dataclass(frozen=True)
class HermitianForm:
    """Hermitian 2-form h with matrix h[conj index, index]."""

    matrix: np.ndarray
    tol: float = 1e-12

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise SignatureError("Hermitian form needs a square matrix")
        object.__setattr__(self, "matrix", m)
        if not nb.arrays_equal(m, nb.conj(m).T, 0.0 if m.dtype == object else self.tol):
            raise SignatureError("matrix is not Hermitian")

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def backend(self) -> str:
        return nb.backend_of(self.matrix)

    def __call__(self, vbar, v):
        """h(conj v1, v2) = conj(v1)^T h v2 given plain vectors v1 (as vbar) and v2."""
        return nb.conj(np.asarray(vbar)) @ self.matrix @ np.asarray(v)


def signature(form: HermitianForm) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a Hermitian form."""
    if form.n > 8:
        raise ValueError("signature is limited to n <= 8")
    if form.backend == nb.EXACT:
        return _exact_signature(form.matrix)
    return _float_signature(form.matrix)


def _float_signature(h: np.ndarray) -> tuple[int, int, int]:
    h = np.asarray(h, dtype=complex)
    scale = float(np.max(np.abs(h))) if h.size else 0.0
    if scale == 0.0:
        return 0, 0, h.shape[0]
    eig = np.linalg.eigvalsh((h + h.conj().T) / 2)
    thr = 1e-10 * scale
    pos = int(np.sum(eig > thr))
    neg = int(np.sum(eig < -thr))
    return pos, neg, h.shape[0] - pos - neg


def _exact_signature(h: np.ndarray) -> tuple[int, int, int]:
    """Congruence diagonalisation S^dagger h S with exact pivoting (Sylvester)."""
    a = np.array(h, dtype=object, copy=True)
    n = a.shape[0]
    pos = neg = 0
    active = list(range(n))
    while active:
        # prefer a nonzero diagonal pivot
        piv = next((i for i in active if not a[i, i].is_zero()), None)
        if piv is None:
            off = next(((i, j) for i in active for j in active if i < j and not a[i, j].is_zero()), None)
            if off is None:
                break
            i, j = off
            # e_i -> e_i + t e_j with t = a_ij makes the new diagonal 2|a_ij|^2
            t = a[i, j]
            _add_congruent(a, i, j, t)
            piv = i
        p = a[piv, piv]
        s = p.sign()
        if s > 0:
            pos += 1
        else:
            neg += 1
        for k in active:
            if k != piv and not a[k, piv].is_zero():
                # eliminate a[k, piv]: row_k -= (a[k,piv]/p) row_piv, same on columns
                f = a[k, piv] / p
                _add_congruent(a, k, piv, -f)
        active.remove(piv)
    return pos, neg, n - pos - neg


def _add_congruent(a: np.ndarray, i: int, j: int, t) -> None:
    """Apply e_i -> e_i + t e_j as a congruence: row_i += t row_j, col_i += conj(t) col_j."""
    a[i, :] = a[i, :] + t * a[j, :]
    tc = t.conjugate()
    a[:, i] = a[:, i] + tc * a[:, j]


def h_contract(x: np.ndarray, y: np.ndarray, h: HermitianForm):
    """<conj X, Y> = conj(X)^{a'}_{b'} Y^a_b h_{a'a} h^{b'b} for X, Y in End V."""
    x = np.asarray(x)
    y = np.asarray(y)
    nb.same_backend(x, y, h.matrix)
    hm = h.matrix
    hinv = _inverse(hm)
    if hinv is None:
        raise DegenerateMetric("h is singular")
    # h^{b'b}: inverse with index order matching h_{a'a}; h_{a'a} h^{b'a} = delta
    hup = hinv.T
    xb = nb.conj(x)
    # sum_{a', b', a, b} xb[a', b'] y[a, b] hm[a', a] hup[b', b]
    out = np.einsum("pq,ab,pa,qb->", xb, y, hm, hup) if x.dtype != object else _einsum_obj(xb, y, hm, hup)
    return out


def _einsum_obj(xb, y, hm, hup):
    n = xb.shape[0]
    total = nb.ZERO
    for p in range(n):
        for q in range(n):
            if xb[p, q].is_zero():
                continue
            for a in range(n):
                if hm[p, a].is_zero():
                    continue
                for b in range(n):
                    total = total + xb[p, q] * y[a, b] * hm[p, a] * hup[q, b]
    return total


def _inverse(m: np.ndarray):
    if m.dtype == object:
        try:
            return exact_inverse(m)
        except ZeroDivisionError:
            return None
    if abs(np.linalg.det(m)) < 1e-14 * max(1.0, float(np.max(np.abs(m))) ** m.shape[0]):
        return None
    return np.linalg.inv(m)


def exact_inverse(m: np.ndarray) -> np.ndarray:
    """Gauss-Jordan inverse over Q(i, sqrt2); raises ZeroDivisionError if singular."""
    n = m.shape[0]
    a = np.array(m, dtype=object, copy=True)
    inv = nb.eye(n, nb.EXACT)
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r, col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            inv[[col, piv]] = inv[[piv, col]]
        p = a[col, col]
        a[col] = np.array([v / p for v in a[col]], dtype=object)
        inv[col] = np.array([v / p for v in inv[col]], dtype=object)
        for r in range(n):
            if r != col and not a[r, col].is_zero():
                f = a[r, col]
                a[r] = a[r] - f * a[col]
                inv[r] = inv[r] - f * inv[col]
    return inv


def exact_det(m: np.ndarray):
    n = m.shape[0]
    a = np.array(m, dtype=object, copy=True)
    det = nb.ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r, col].is_zero()), None)
        if piv is None:
            return nb.ZERO
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = -det
        p = a[col, col]
        det = det * p
        for r in range(col + 1, n):
            if not a[r, col].is_zero():
                f = a[r, col] / p
                a[r] = a[r] - f * a[col]
    return det


def trace(m: np.ndarray):
    m = np.asarray(m)
    if m.dtype == object:
        return nb.exact_sum(m[i, i] for i in range(m.shape[0]))
    return np.trace(m)


def matrix_from_rows(rows: Sequence[Sequence], backend: str) -> np.ndarray:
    if backend == nb.EXACT:
        return nb.exact_array(rows)
    return np.array(rows, dtype=complex)

"""FN bracket from the decomposable formula, on plain differential forms.

Forms here use the basis coefficients of dx^I (I increasing), independent of
the library's antisymmetric-component storage.
"""

from fractions import Fraction
from math import factorial

from ewgeom.fnforms import TVForm, sort_sign
from ewgeom.poly import Poly


def _add(f, I, p):
    if p.is_zero():
        return
    f[I] = f[I] + p if I in f else p
    if f[I].is_zero():
        del f[I]


def wedge(a, b):
    out = {}
    for I, p in a.items():
        for J, q in b.items():
            s, K = sort_sign(I + J)
            if s:
                _add(out, K, p * q * s)
    return out


def ext_d(a, N):
    out = {}
    for I, p in a.items():
        for c in range(N):
            s, K = sort_sign((c,) + I)
            if s:
                _add(out, K, p.diff(c) * s)
    return out


def interior(X, a):
    out = {}
    for I, p in a.items():
        for pos, c in enumerate(I):
            if X[c].is_zero():
                continue
            J = I[:pos] + I[pos + 1:]
            _add(out, J, X[c] * p * (-1 if pos % 2 else 1))
    return out


def lie_derivative(X, a, N):
    out = {}
    for I, p in interior(X, ext_d(a, N)).items():
        _add(out, I, p)
    for I, p in ext_d(interior(X, a), N).items():
        _add(out, I, p)
    return out


def vf_bracket(X, Y, N):
    zero = X[0] * 0
    out = []
    for b in range(N):
        acc = zero
        for c in range(N):
            acc = acc + X[c] * Y[b].diff(c) - Y[c] * X[b].diff(c)
        out.append(acc)
    return out


def _scale(a, c):
    return {I: p * c for I, p in a.items() if not (p * c).is_zero()}


def _decompose(phi: TVForm):
    names = phi.names
    N = phi.dim
    zero = Poly.zero(names)
    one = Poly.const(names, 1)
    terms = []
    for (I, b), p in phi.comps.items():
        X = [one if c == b else zero for c in range(N)]
        terms.append(({I: p * factorial(phi.r)}, X))
    return terms


def decomposable_bracket(alpha, X, r, beta, Y, s, N):
    """List of (form, vector) pairs summing to [alpha (x) X, beta (x) Y]."""
    sign = -1 if r % 2 else 1
    res = [
        (wedge(alpha, beta), vf_bracket(X, Y, N)),
        (wedge(alpha, lie_derivative(X, beta, N)), Y),
        (_scale(wedge(lie_derivative(Y, alpha, N), beta), -1), X),
        (_scale(wedge(ext_d(alpha, N), interior(X, beta)), sign), Y),
        (_scale(wedge(interior(Y, alpha), ext_d(beta, N)), sign), X),
    ]
    return res


def oracle_bracket(phi: TVForm, psi: TVForm) -> TVForm:
    N = phi.dim
    deg = phi.r + psi.r
    acc = {}
    for alpha, X in _decompose(phi):
        for beta, Y in _decompose(psi):
            for form, vec in decomposable_bracket(alpha, X, phi.r, beta, Y, psi.r, N):
                for I, p in form.items():
                    for b in range(N):
                        if not vec[b].is_zero():
                            key = (I, b)
                            v = p * vec[b]
                            acc[key] = acc[key] + v if key in acc else v
    norm = Fraction(1, factorial(deg))
    return TVForm(phi.n, phi.k, deg, {key: p * norm for key, p in acc.items()})

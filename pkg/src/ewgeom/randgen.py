"""Seeded random instances for property checks (polynomial forms, connections, frames)."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import numpy as np

from .fnforms import LinearConnection, TVForm, chart_names, gauge_transform, poly_matmul, zero_linear_connection
from .poly import Poly


def random_poly(rng: random.Random, names, nterms: int = 2, maxdeg: int = 2, nvars: int | None = None,
                coeff: int = 3) -> Poly:
    """Sparse polynomial in the first ``nvars`` variables with small integer coefficients."""
    nvars = len(names) if nvars is None else nvars
    terms = {}
    for _ in range(nterms):
        e = [0] * len(names)
        if nvars:
            for _ in range(rng.randint(0, maxdeg)):
                e[rng.randrange(nvars)] += 1
        terms[tuple(e)] = terms.get(tuple(e), Fraction(0)) + rng.randint(-coeff, coeff)
    return Poly(names, terms)


def random_tvform(rng: random.Random, n: int, k: int, r: int, density: int = 3, maxdeg: int = 2) -> TVForm:
    N = n + k
    names = chart_names(n, k)
    tuples = list(combinations(range(N), r))
    comps = {}
    for _ in range(density):
        comps[(rng.choice(tuples), rng.randrange(N))] = random_poly(rng, names, maxdeg=maxdeg)
    return TVForm(n, k, r, comps)


def random_linear_connection(rng: random.Random, n: int, k: int, nterms: int = 2, maxdeg: int = 2) -> LinearConnection:
    names = chart_names(n, k)
    coeffs = np.empty((n, k, k), dtype=object)
    for idx in np.ndindex(coeffs.shape):
        coeffs[idx] = random_poly(rng, names, nterms=nterms, maxdeg=maxdeg, nvars=n)
    return LinearConnection(n, k, coeffs)


def random_unimodular(rng: random.Random, n: int, k: int, maxdeg: int = 1) -> np.ndarray:
    """Product of a lower and an upper unitriangular polynomial matrix (det = 1)."""
    names = chart_names(n, k)
    one, zero = Poly.const(names, 1), Poly.zero(names)
    U = np.empty((k, k), dtype=object)
    Lo = np.empty((k, k), dtype=object)
    for i in range(k):
        for j in range(k):
            if i == j:
                U[i, j] = Lo[i, j] = one
            elif i < j:
                U[i, j] = random_poly(rng, names, nterms=1, maxdeg=maxdeg, nvars=n, coeff=2)
                Lo[i, j] = zero
            else:
                U[i, j] = zero
                Lo[i, j] = random_poly(rng, names, nterms=1, maxdeg=maxdeg, nvars=n, coeff=2)
    return poly_matmul(Lo, U)


def random_flat_connection(rng: random.Random, n: int, k: int) -> LinearConnection:
    """Gauge transform of the trivial connection, hence flat."""
    return gauge_transform(zero_linear_connection(n, k), random_unimodular(rng, n, k))


def random_anti_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a - a.conj().T) / 2


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2

"""Sparse multivariate polynomials with exact coefficients.

Coefficients are Fractions by default; :class:`~ewgeom.numbers.Qi2` values
are accepted too, which is how complex (e.g. anti-Hermitian) connection
coefficients stay exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from operator import add
from typing import Iterable, Mapping

from .errors import ChartMismatch, ParseError


def _is_zero(c) -> bool:
    return c == 0 if not hasattr(c, "is_zero") else c.is_zero()


def _integer_form(terms):
    """(integer numerators, common denominator) when every coefficient is a Fraction, else None."""
    den = 1
    for c in terms.values():
        if type(c) is not Fraction:
            return None
        den = lcm(den, c.denominator)
    return {e: c.numerator * (den // c.denominator) for e, c in terms.items()}, den


def _normalize_coeff(c):
    # collapse rational Qi2 values so that equal polynomials compare equal
    if hasattr(c, "is_rational") and c.is_rational():
        return c.a
    if isinstance(c, int):
        return Fraction(c)
    return c


class Poly:
    """Polynomial in the named variables ``names``.

    ``terms`` maps exponent tuples (one non-negative int per variable) to
    nonzero coefficients.
    """

    __slots__ = ("names", "terms")

    def __init__(self, names: tuple[str, ...], terms: Mapping[tuple[int, ...], object] | None = None):
        self.names = tuple(names)
        clean = {}
        n = len(self.names)
        for exps, c in (terms or {}).items():
            if len(exps) != n:
                raise ValueError("exponent arity does not match the variable count")
            if type(c) is Fraction:  # common case, already normalised
                if c:
                    clean[tuple(exps)] = c
            elif not _is_zero(c):
                clean[tuple(exps)] = _normalize_coeff(c)
        self.terms = clean

    # --- constructors ----------------------------------------------------
    @classmethod
    def const(cls, names, c) -> "Poly":
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def var(cls, names, name_or_index) -> "Poly":
        names = tuple(names)
        i = names.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        exps = [0] * len(names)
        exps[i] = 1
        return cls(names, {tuple(exps): Fraction(1)})

    @classmethod
    def zero(cls, names) -> "Poly":
        return cls(names, {})

    # --- predicates ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.names), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def depends_on(self, index: int) -> bool:
        return any(e[index] for e in self.terms)

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self.terms), default=-1)

    # --- arithmetic ------------------------------------------------------
    def _check(self, other: "Poly") -> None:
        if self.names != other.names:
            raise ChartMismatch(f"variables {self.names} vs {other.names}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(self.names, other)

    def __add__(self, other) -> "Poly":
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out[e] + c if e in out else c
        return Poly(self.names, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if _is_zero(other):
                return Poly.zero(self.names)
            return Poly(self.names, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        a, b = _integer_form(self.terms), _integer_form(other.terms)
        if a is not None and b is not None:
            # rational case: multiply integers, build one Fraction per output term
            (na, da), (nb_, db) = a, b
            acc: dict = {}
            for e1, c1 in na.items():
                for e2, c2 in nb_.items():
                    e = tuple(map(add, e1, e2))
                    acc[e] = acc.get(e, 0) + c1 * c2
            den = da * db
            return Poly(self.names, {e: Fraction(v, den) for e, v in acc.items() if v})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return Poly(self.names, out)

    def __rmul__(self, other) -> "Poly":
        return self * other

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(self.names, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.names == other.names and self.terms == other.terms
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def conjugate(self) -> "Poly":
        return Poly(self.names, {e: (c.conjugate() if hasattr(c, "conjugate") else c) for e, c in self.terms.items()})

    # --- calculus / substitution ----------------------------------------
    def diff(self, index: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            k = e[index]
            if k:
                ne = list(e)
                ne[index] = k - 1
                out[tuple(ne)] = c * k
        return Poly(self.names, out)

    def evaluate(self, point: Iterable):
        point = list(point)
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x**k
            total = total + term
        return total

    def substitute(self, subs: Mapping[int, "Poly"]) -> "Poly":
        """Replace variable ``i`` by ``subs[i]`` (polynomials in the same variables)."""
        out = Poly.zero(self.names)
        for e, c in self.terms.items():
            term = Poly.const(self.names, c)
            for i, k in enumerate(e):
                if not k:
                    continue
                if i in subs:
                    term = term * subs[i] ** k
                else:
                    ne = [0] * len(self.names)
                    ne[i] = k
                    term = term * Poly(self.names, {tuple(ne): 1})
            out = out + term
        return out

    def map_coeffs(self, fn) -> "Poly":
        return Poly(self.names, {e: fn(c) for e, c in self.terms.items()})

    def embed(self, names: tuple[str, ...]) -> "Poly":
        """Re-express in a superset of variables."""
        idx = [names.index(n) for n in self.names]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(names)
            for i, k in zip(idx, e):
                ne[i] = k
            out[tuple(ne)] = c
        return Poly(names, out)

    def coefficient_in(self, index: int, power: int) -> "Poly":
        """Coefficient of x_index**power, as a polynomial in the same variables."""
        out = {}
        for e, c in self.terms.items():
            if e[index] == power:
                ne = list(e)
                ne[index] = 0
                out[tuple(ne)] = c
        return Poly(self.names, out)

    # --- text ------------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def _monomial_str(names, exps) -> str:
    parts = []
    for n, k in zip(names, exps):
        if k == 1:
            parts.append(n)
        elif k > 1:
            parts.append(f"{n}^{k}")
    return " ".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical text: terms in descending graded-lex order, e.g. ``3/2 x1^2 y1 - x2``."""
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-k for k in kv[0])))
    out = []
    for i, (e, c) in enumerate(items):
        if not isinstance(c, Fraction):
            raise ValueError("only rational polynomials have a text form")
        mono = _monomial_str(p.names, e)
        neg = c < 0
        mag = -c if neg else c
        body = mono if (mag == 1 and mono) else (f"{mag} {mono}" if mono else f"{mag}")
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"{'-' if neg else '+'} {body}")
    return " ".join(out)


_TERM_RE = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*((?:[A-Za-z]\w*(?:\^\d+)?\s*)*)")
_FACTOR_RE = re.compile(r"([A-Za-z]\w*)(?:\^(\d+))?")


def parse_poly(text: str, names: tuple[str, ...]) -> Poly:
    """Parse ``"3/2 x1^2 y1 - x2"`` over the variables ``names``."""
    names = tuple(names)
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial literal")
    pos = 0
    terms: dict = {}
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, num, factors = m.group(1), m.group(2), m.group(3).strip()
        if not first and sign is None:
            raise ParseError(f"missing operator near {s[pos:]!r}")
        if num is None and not factors:
            raise ParseError(f"empty term near {s[pos:]!r}")
        coef = Fraction(num) if num else Fraction(1)
        if sign == "-":
            coef = -coef
        exps = [0] * len(names)
        for f in _FACTOR_RE.finditer(factors):
            if f.group(1) not in names:
                raise ParseError(f"unknown variable {f.group(1)!r}")
            exps[names.index(f.group(1))] += int(f.group(2) or 1)
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + coef
        pos = m.end()
        first = False
    return Poly(names, terms)

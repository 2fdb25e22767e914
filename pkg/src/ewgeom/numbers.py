"""Exact scalars in the field Q(i, sqrt 2) and backend helpers.

An exact scalar is ``(a + b i) + (c + d i) sqrt2`` with rational a, b, c, d.
Gaussian rationals are the subfield with c = d = 0; the sqrt2 part keeps the
1/sqrt2 normalisations of Pauli and Dirac matrices exact.

Arrays of :class:`Qi2` use ``dtype=object`` and form the *exact* backend;
``complex128`` arrays form the *float* backend. The two never mix silently.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

import numpy as np

from .errors import BackendMismatch

Number = Union[int, Fraction, "Qi2"]

EXACT = "exact"
FLOAT = "float"


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {x!r} to an exact rational")


class Qi2:
    """Element (a + b i) + (c + d i) sqrt2 of Q(i, sqrt 2)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = _frac(a)
        self.b = _frac(b)
        self.c = _frac(c)
        self.d = _frac(d)

    @classmethod
    def coerce(cls, x) -> "Qi2":
        if isinstance(x, Qi2):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            return cls(x)
        raise BackendMismatch(f"refusing to coerce {type(x).__name__} into an exact scalar")

    # --- structure -------------------------------------------------------
    def conjugate(self) -> "Qi2":
        return Qi2(self.a, -self.b, self.c, -self.d)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_real(self) -> bool:
        return not (self.b or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    @property
    def real(self) -> "Qi2":
        return Qi2(self.a, 0, self.c, 0)

    @property
    def imag(self) -> "Qi2":
        return Qi2(self.b, 0, self.d, 0)

    def sign(self) -> int:
        """Sign of a real element a + c sqrt2, decided exactly."""
        if not self.is_real():
            raise ValueError("sign of a non-real exact scalar")
        return _sign_surd(self.a, self.c)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.a

    def sqrt(self) -> "Qi2":
        """Square root of a non-negative real element, when it lies in the field.

        Only the cases q**2 and 2 q**2 (q rational), and squares of a + c sqrt2
        with rational a, c, are recognised.
        """
        if not self.is_real() or self.sign() < 0:
            raise ValueError(f"no real square root of {self}")
        if self.is_zero():
            return Qi2()
        if self.c == 0:
            r = _rational_sqrt(self.a)
            if r is not None:
                return Qi2(r)
            r = _rational_sqrt(self.a / 2)
            if r is not None:
                return Qi2(0, 0, r)
        else:
            # (p + q sqrt2)^2 = p^2 + 2 q^2 + 2 p q sqrt2
            # => p^2 + 2 q^2 = a, p q = c/2; solve the quadratic in p^2.
            disc = self.a * self.a - 2 * self.c * self.c
            s = _rational_sqrt(disc) if disc >= 0 else None
            if s is not None:
                for p2 in ((self.a + s) / 2, (self.a - s) / 2):
                    p = _rational_sqrt(p2)
                    if p:
                        q = self.c / (2 * p)
                        cand = Qi2(p, 0, q)
                        if cand.sign() < 0:
                            cand = -cand
                        if cand * cand == self:
                            return cand
        raise ValueError(f"square root of {self} is not in Q(i, sqrt2); use the float backend")

    # --- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (complex, float)) or _is_float_array(other):
            return NotImplemented
        if isinstance(other, np.ndarray):
            return NotImplemented
        o = Qi2.coerce(other)
        return Qi2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Qi2(-self.a, -self.b, -self.c, -self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, (np.ndarray, complex, float)):
            return NotImplemented
        o = Qi2.coerce(other)
        return Qi2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        return Qi2.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (np.ndarray, complex, float)):
            return NotImplemented
        o = Qi2.coerce(other)
        if self.is_zero() or o.is_zero():
            return Qi2()
        if o.is_rational():
            k = o.a
            return Qi2(self.a * k, self.b * k, self.c * k, self.d * k)
        if self.is_rational():
            k = self.a
            return Qi2(o.a * k, o.b * k, o.c * k, o.d * k)
        # (x + y r)(u + v r) with r^2 = 2, x, y, u, v Gaussian rationals
        xa, xb, ya, yb = self.a, self.b, self.c, self.d
        ua, ub, va, vb = o.a, o.b, o.c, o.d
        # Gaussian products
        xu = (xa * ua - xb * ub, xa * ub + xb * ua)
        yv = (ya * va - yb * vb, ya * vb + yb * va)
        xv = (xa * va - xb * vb, xa * vb + xb * va)
        yu = (ya * ua - yb * ub, ya * ub + yb * ua)
        return Qi2(xu[0] + 2 * yv[0], xu[1] + 2 * yv[1], xv[0] + yu[0], xv[1] + yu[1])

    __rmul__ = __mul__

    def _inverse(self) -> "Qi2":
        if self.is_zero():
            raise ZeroDivisionError("exact division by zero")
        # 1/(x + y r) = (x - y r) / (x^2 - 2 y^2), then invert the Gaussian rational
        x = Qi2(self.a, self.b)
        y = Qi2(self.c, self.d)
        num = Qi2(self.a, self.b, -self.c, -self.d)
        den = x * x - 2 * (y * y)
        # den is a Gaussian rational p + q i
        p, q = den.a, den.b
        mod = p * p + q * q
        return num * Qi2(p / mod, -q / mod)

    def __truediv__(self, other):
        if isinstance(other, (np.ndarray, complex, float)):
            return NotImplemented
        return self * Qi2.coerce(other)._inverse()

    def __rtruediv__(self, other):
        return Qi2.coerce(other) * self._inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (self._inverse()) ** (-n)
        out = Qi2(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __abs__(self) -> float:
        return abs(complex(self))

    # --- comparison / conversion ------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Qi2):
            return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        r2 = math.sqrt(2.0)
        return complex(float(self.a) + float(self.c) * r2, float(self.b) + float(self.d) * r2)

    def __float__(self):
        if not self.is_real():
            raise TypeError("complex exact scalar has no float value")
        return float(self.a) + float(self.c) * math.sqrt(2.0)

    def __repr__(self):
        return f"Qi2({self})"

    def __str__(self):
        re_s = _surd_str(self.a, self.c)
        im_s = _surd_str(self.b, self.d)
        if im_s == "0":
            return re_s
        if re_s == "0":
            return f"({im_s})i"
        return f"{re_s} + ({im_s})i"


SQRT2 = Qi2(0, 0, 1)
INV_SQRT2 = Qi2(0, 0, Fraction(1, 2))
I = Qi2(0, 1)
ONE = Qi2(1)
ZERO = Qi2(0)


def _sign_surd(a: Fraction, c: Fraction) -> int:
    sa = (a > 0) - (a < 0)
    sc = (c > 0) - (c < 0)
    if sc == 0:
        return sa
    if sa == 0 or sa == sc:
        return sc
    # opposite signs: compare a^2 with 2 c^2
    diff = a * a - 2 * c * c
    if diff == 0:
        return 0
    return sa if diff > 0 else sc


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _surd_str(a: Fraction, c: Fraction) -> str:
    if c == 0:
        return str(a)
    tail = f"{abs(c)}*sqrt2"
    if a == 0:
        return f"-{tail}" if c < 0 else tail
    return f"{a}{'-' if c < 0 else '+'}{tail}"


_SURD_RE = re.compile(
    r"^\s*(?P<a>[+-]?\d+(?:/\d+)?)?\s*(?:(?P<sgn>[+-])?\s*(?P<c>\d+(?:/\d+)?)\*sqrt2)?\s*$"
)


def parse_surd(text: str) -> tuple[Fraction, Fraction]:
    """Parse ``"p/q"``, ``"r/s*sqrt2"`` or ``"p/q+r/s*sqrt2"`` into (a, c)."""
    m = _SURD_RE.match(text)
    if not m or (m.group("a") is None and m.group("c") is None):
        raise ValueError(f"bad exact real literal {text!r}")
    a = Fraction(m.group("a")) if m.group("a") is not None else Fraction(0)
    c = Fraction(0)
    if m.group("c") is not None:
        c = Fraction(m.group("c"))
        if m.group("sgn") == "-":
            c = -c
    return a, c


# --- backend helpers --------------------------------------------------------

def _is_float_array(x) -> bool:
    return isinstance(x, np.ndarray) and x.dtype != object


def backend_of(arr: np.ndarray) -> str:
    return EXACT if np.asarray(arr).dtype == object else FLOAT


def exact_array(values) -> np.ndarray:
    """Build an exact (object) array; ints, Fractions and 'p/q' strings accepted."""
    arr = np.array(values, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = Qi2(_frac(v)) if isinstance(v, (int, str, Fraction)) else Qi2.coerce(v)
    return out


def to_float(arr: np.ndarray) -> np.ndarray:
    arr = np.asarray(arr)
    if arr.dtype == object:
        return np.vectorize(complex, otypes=[complex])(arr) if arr.size else arr.astype(complex)
    return arr.astype(complex)


def conj(arr: np.ndarray) -> np.ndarray:
    arr = np.asarray(arr)
    if arr.dtype == object:
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = v.conjugate()
        return out
    return np.conj(arr)


def zeros(shape, backend: str) -> np.ndarray:
    if backend == EXACT:
        out = np.empty(shape, dtype=object)
        out.fill(ZERO)
        return out
    return np.zeros(shape, dtype=complex)


def eye(n: int, backend: str) -> np.ndarray:
    out = zeros((n, n), backend)
    for i in range(n):
        out[i, i] = ONE if backend == EXACT else 1.0
    return out


def same_backend(*arrays) -> str:
    kinds = {backend_of(a) for a in arrays}
    if len(kinds) > 1:
        raise BackendMismatch("mixed exact and float operands")
    return kinds.pop()


def is_zero_array(arr: np.ndarray, tol: float = 0.0) -> bool:
    arr = np.asarray(arr)
    if arr.dtype == object:
        return all(v.is_zero() for v in arr.flat)
    return bool(np.all(np.abs(arr) <= tol))


def arrays_equal(x: np.ndarray, y: np.ndarray, tol: float = 0.0) -> bool:
    same_backend(x, y)
    return is_zero_array(np.asarray(x) - np.asarray(y), tol)


def scalar_to_json(v):
    """Complex scalar -> [re, im]; exact parts become strings."""
    if isinstance(v, Qi2):
        return [_surd_str(v.a, v.c), _surd_str(v.b, v.d)]
    v = complex(v)
    return [v.real, v.imag]


def scalar_from_json(pair, backend: str):
    re_part, im_part = pair
    if backend == EXACT:
        a, c = parse_surd(str(re_part))
        b, d = parse_surd(str(im_part))
        return Qi2(a, b, c, d)
    if isinstance(re_part, str) or isinstance(im_part, str):
        raise ValueError("float backend expects numeric [re, im] pairs")
    return complex(float(re_part), float(im_part))


def array_to_json(arr: np.ndarray):
    arr = np.asarray(arr)
    if arr.ndim == 0:
        return scalar_to_json(arr.item())
    return [array_to_json(sub) for sub in arr]


def array_from_json(data, backend: str) -> np.ndarray:
    def walk(node):
        if isinstance(node, list) and len(node) == 2 and not isinstance(node[0], list):
            return scalar_from_json(node, backend)
        return [walk(n) for n in node]

    nested = walk(data)
    if backend == EXACT:
        arr = np.empty(_shape(nested), dtype=object)
        for idx in np.ndindex(arr.shape):
            node = nested
            for i in idx:
                node = node[i]
            arr[idx] = node
        return arr
    return np.array(nested, dtype=complex)


def _shape(nested) -> tuple:
    shape = []
    node = nested
    while isinstance(node, list):
        shape.append(len(node))
        node = node[0] if node else None
    return tuple(shape)


def gaussian(re, im=0) -> Qi2:
    return Qi2(_frac(re), _frac(im))


def exact_sum(values: Iterable) -> Qi2:
    total = ZERO
    for v in values:
        total = total + v
    return total

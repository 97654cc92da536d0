"""Truncated power series in ``q`` with exact or modular integer coefficients.

The only operations the identities need are multiplication and division by
binomials ``1 - q^b`` (plus multiplication by sparse 0/1 polynomials for the
direct multiplicity count).  Each is a linear pass over the coefficients:
division is a prefix accumulation along every residue class mod ``b``.

Coefficients live in an ``int64`` array while a worst-case bound on the next
operation's output fits, and are promoted to Python integers (``object``
arrays) once it might not.  Results never overflow silently.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .arith import MAX_MODULUS

_INT64_SAFE = 2**62


class CoefficientSeries:
    """Coefficients ``c_0..c_N`` of a series truncated modulo ``q^(N+1)``.

    ``modulus=None`` is the exact ring; otherwise coefficients are kept in
    ``[0, modulus)``.  Instances are treated as immutable.
    """

    __slots__ = ("order", "modulus", "_c")

    def __init__(self, coeffs, modulus: int | None = None):
        if modulus is not None and not 1 <= modulus <= MAX_MODULUS:
            raise ValueError(f"modulus must lie in [1, 2**63 - 1], got {modulus}")
        c = _as_array(coeffs)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("need a non-empty one-dimensional coefficient list")
        if modulus is not None:
            c = c % modulus
        self.order = c.size - 1
        self.modulus = modulus
        self._c = c

    @property
    def coefficients(self) -> list[int]:
        return [int(v) for v in self._c.tolist()]

    def __getitem__(self, i):
        v = self._c[i]
        if isinstance(i, slice):
            return [int(x) for x in v.tolist()]
        return int(v)

    def __len__(self):
        return self.order + 1

    def __eq__(self, other):
        if not isinstance(other, CoefficientSeries):
            return NotImplemented
        return (self.order == other.order and self.modulus == other.modulus
                and self.coefficients == other.coefficients)

    def __repr__(self):
        head = self.coefficients[:8]
        more = ", ..." if self.order >= 8 else ""
        ring = "ZZ" if self.modulus is None else f"Z/{self.modulus}"
        return f"CoefficientSeries({head}{more}, N={self.order}, ring={ring})"

    def reduce(self, d: int) -> "CoefficientSeries":
        """Image under the reduction map into ``Z/d``."""
        if self.modulus is not None and self.modulus % d:
            raise ValueError(f"cannot reduce mod {d} from mod {self.modulus}")
        return CoefficientSeries(self._c.copy(), d)

    def _wrap(self, c: np.ndarray) -> "CoefficientSeries":
        out = object.__new__(CoefficientSeries)
        if self.modulus is not None:
            c %= self.modulus
        out.order, out.modulus, out._c = self.order, self.modulus, c
        return out


def _as_array(coeffs) -> np.ndarray:
    if isinstance(coeffs, np.ndarray) and coeffs.dtype in (np.int64, object):
        return coeffs.copy()
    values = [int(v) for v in coeffs]
    if all(-_INT64_SAFE < v < _INT64_SAFE for v in values):
        return np.array(values, dtype=np.int64)
    arr = np.empty(len(values), dtype=object)
    arr[:] = values
    return arr


def _wide_dtype(c: np.ndarray, growth: int):
    """Dtype able to absorb a ``growth``-fold increase of the magnitudes in ``c``."""
    if c.dtype == object or int(np.abs(c).max()) * growth >= _INT64_SAFE:
        return object
    return np.int64


def _headroom(c: np.ndarray, growth: int) -> np.ndarray:
    return c.astype(_wide_dtype(c, growth))


def one(N: int, modulus: int | None = None) -> CoefficientSeries:
    if N < 0:
        raise ValueError(f"truncation order must be non-negative, got {N}")
    c = np.zeros(N + 1, dtype=np.int64)
    c[0] = 1
    return CoefficientSeries(c, modulus)


def mul_binomial(s: CoefficientSeries, b: int) -> CoefficientSeries:
    """``s * (1 - q^b)`` truncated at the order of ``s``."""
    if b < 1:
        raise ValueError(f"binomial exponent must be positive, got {b}")
    c = _headroom(s._c, 2)
    if b <= s.order:
        c[b:] -= s._c[:-b]
    return s._wrap(c)


def div_binomial(s: CoefficientSeries, b: int) -> CoefficientSeries:
    """``s / (1 - q^b)``, i.e. ``c'_i = c_i + c'_{i-b}``."""
    if b < 1:
        raise ValueError(f"binomial exponent must be positive, got {b}")
    size = s.order + 1
    if b >= size:
        return s._wrap(s._c.copy())
    rows = -(-size // b)
    padded = np.zeros(rows * b, dtype=_wide_dtype(s._c, rows))
    padded[:size] = s._c
    np.cumsum(padded.reshape(rows, b), axis=0, out=padded.reshape(rows, b))
    return s._wrap(padded[:size])


def mul_sparse(s: CoefficientSeries, exponents: Sequence[int]) -> CoefficientSeries:
    """``s * (1 + sum q^e)`` for distinct positive exponents ``e``."""
    exps = [e for e in exponents if e <= s.order]
    if not exps:
        return s._wrap(s._c.copy())
    c = _headroom(s._c, len(exps) + 1)
    src = s._c if c.dtype == s._c.dtype else s._c.astype(c.dtype)
    for e in exps:
        if e < 1:
            raise ValueError(f"exponents must be positive, got {e}")
        c[e:] += src[:-e]
    return s._wrap(c)


def product_of_factors(factors: Iterable[int], N: int,
                       modulus: int | None = None) -> CoefficientSeries:
    """Expand ``prod (1 - q^b)^{sign}`` truncated at ``q^N``.

    A positive entry ``+b`` is a numerator factor ``1 - q^b``; a negative
    entry ``-b`` is a denominator ``1/(1 - q^b)``.  Factors with ``b > N``
    are the identity and are skipped.
    """
    s = one(N, modulus)
    for f in factors:
        f = int(f)
        if f == 0:
            raise ValueError("factor exponent 0 is not a binomial 1 - q^b")
        b = abs(f)
        if b > N:
            continue
        s = mul_binomial(s, b) if f > 0 else div_binomial(s, b)
    return s

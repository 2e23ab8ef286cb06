"""Exact truncated power series over rationals, with the coefficientwise order.

Every coefficient is a ``fractions.Fraction``; no floating point enters this
module.  Binary operations truncate to the minimum order of their operands and
never extend a series with implicit zeros, so a dominance check only ever
compares coefficients that were actually computed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class TruncatedSeries:
    """Immutable order-N truncation of a power series.

    ``s[m]`` is the coefficient of ``x**m`` for ``0 <= m <= s.order``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational]):
        cs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least its constant coefficient")
        self._coeffs = cs

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> "TruncatedSeries":
        # internal fast path: caller guarantees a non-empty list of Fractions
        s = object.__new__(cls)
        s._coeffs = tuple(coeffs)
        return s

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls._raw([_ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls._raw([_ONE] + [_ZERO] * order)

    @classmethod
    def monomial(cls, order: int, m: int, c: Rational = 1) -> "TruncatedSeries":
        """c * x**m truncated at ``order`` (zero series if m exceeds the order)."""
        if m < 0:
            raise ValueError(f"monomial degree must be >= 0, got {m}")
        coeffs = [_ZERO] * (order + 1)
        if m <= order:
            coeffs[m] = Fraction(c)
        return cls._raw(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, m: int) -> Fraction:
        if not 0 <= m <= self.order:
            raise IndexError(f"coefficient index {m} outside truncation order {self.order}")
        return self._coeffs[m]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries(order={self.order}, [{head}{tail}])"

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop coefficients above ``order``; never extends."""
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries._raw(list(self._coeffs[: order + 1]))

    def scale(self, c: Rational) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries._raw([c * a for a in self._coeffs])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._raw([-a for a in self._coeffs])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return TruncatedSeries._raw([a[i] + b[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return TruncatedSeries._raw([a[i] - b[i] for i in range(n + 1)])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        # Cauchy product; iterate over the operand with fewer nonzero terms so
        # that multiplying by an almost-empty factor costs almost nothing.
        terms_a = [(i, c) for i, c in enumerate(a[: n + 1]) if c]
        terms_b = [(j, c) for j, c in enumerate(b[: n + 1]) if c]
        if len(terms_a) <= len(terms_b):
            sparse, dense = terms_a, b
        else:
            sparse, dense = terms_b, a
        out = [_ZERO] * (n + 1)
        for j, cj in sparse:
            for i in range(n - j + 1):
                ci = dense[i]
                if ci:
                    out[i + j] += ci * cj
        return TruncatedSeries._raw(out)


def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise sum, truncated at min(f.order, g.order)."""
    return f + g


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at min(f.order, g.order)."""
    return f * g


def dominates(f: TruncatedSeries, g: TruncatedSeries) -> bool:
    """True iff f_m >= g_m for every m up to the shared truncation order."""
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    return all(a[i] >= b[i] for i in range(n + 1))


def exp_series(f: TruncatedSeries) -> TruncatedSeries:
    """exp(f) for a series with zero constant term.

    Uses the derivative recurrence g_m = (1/m) * sum_j j * f_j * g_{m-j},
    which keeps every coefficient an exact rational.
    """
    if f[0] != 0:
        raise ValueError("exp_series requires a zero constant term")
    n = f.order
    fs = f.coeffs
    weighted = [(j, j * fs[j]) for j in range(1, n + 1) if fs[j]]
    g: list[Fraction] = [_ONE] + [_ZERO] * n
    for m in range(1, n + 1):
        s = _ZERO
        for j, jfj in weighted:
            if j > m:
                break
            gmj = g[m - j]
            if gmj:
                s += jfj * gmj
        g[m] = s / m
    return TruncatedSeries._raw(g)


def log_series(f: TruncatedSeries) -> TruncatedSeries:
    """Inverse of exp_series for a series with constant term 1."""
    if f[0] != 1:
        raise ValueError("log_series requires constant term 1")
    n = f.order
    fs = f.coeffs
    g: list[Fraction] = [_ZERO] * (n + 1)
    for m in range(1, n + 1):
        s = _ZERO
        for j in range(1, m):
            gj = g[j]
            fmj = fs[m - j]
            if gj and fmj:
                s += j * gj * fmj
        g[m] = fs[m] - s / m
    return TruncatedSeries._raw(g)


def pow_rational(f: TruncatedSeries, e: Rational) -> TruncatedSeries:
    """f**e for rational e and constant term 1, via exp(e * log(f))."""
    if f[0] != 1:
        raise ValueError("pow_rational requires constant term 1")
    return exp_series(log_series(f).scale(Fraction(e)))


def substitute_monomial(f: TruncatedSeries, r: int, s: Rational) -> TruncatedSeries:
    """f evaluated at s * x**r, truncated at f's order."""
    if r < 1:
        raise ValueError(f"substitution exponent must be >= 1, got {r}")
    n = f.order
    s = Fraction(s)
    out = [_ZERO] * (n + 1)
    power = _ONE
    for i in range(n // r + 1):
        out[i * r] = f[i] * power
        power *= s
    return TruncatedSeries._raw(out)


def exp_sected(d: int, r: int, s: Rational, order: int) -> TruncatedSeries:
    """The d-sected exponential sum_i y**(i*d) / (i*d)! evaluated at y = s * x**r.

    Keeps every d-th term of exp, so the coefficient at x**(i*r*d) is
    s**(i*d) / (i*d)! and everything else vanishes.  With d = 1 this is just
    exp(s * x**r).
    """
    if d < 1:
        raise ValueError(f"section count must be >= 1, got {d}")
    if r < 1:
        raise ValueError(f"substitution exponent must be >= 1, got {r}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    s = Fraction(s)
    out = [_ZERO] * (order + 1)
    step = r * d
    i = 0
    while i * step <= order:
        out[i * step] = s ** (i * d) / math.factorial(i * d)
        i += 1
    return TruncatedSeries._raw(out)

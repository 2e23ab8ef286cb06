"""Asymptotic law of the root-existence probabilities: exponent, constant, diagnostics.

The coefficients p_m decay like C * m**((phi(n) - n)/n).  The exponent is
exact rational arithmetic; the constant C is the product of the singularity
constant of the coprime factor q1 and the value at 1 of the constrained
factor B, and both are reported as outward-rounded intervals.  This is the
only module in the package that touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .envelope import exp_envelope, exp_upper, log_q2_envelope, _round_up
from .numtheory import divisors, moebius, totient
from .rootgf import RootProblem, build_B, build_p, build_q2
from .series import TruncatedSeries

Rational = Union[int, Fraction]

DEFAULT_LOWER_TERMS = 64


def _float_below(x: Fraction) -> float:
    """Largest double <= x (next representable below on inexact conversion)."""
    f = float(x)
    if math.isinf(f):
        return f
    return f if Fraction(f) <= x else math.nextafter(f, -math.inf)


def _float_above(x: Fraction) -> float:
    try:
        f = float(x)
    except OverflowError:
        return math.inf
    if math.isinf(f):
        return f
    return f if Fraction(f) >= x else math.nextafter(f, math.inf)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] guaranteed to contain the represented quantity."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not self.lo <= self.hi:
            raise ValueError(f"empty interval: [{self.lo}, {self.hi}]")

    @classmethod
    def from_fractions(cls, lo: Rational, hi: Rational) -> "Interval":
        return cls(_float_below(Fraction(lo)), _float_above(Fraction(hi)))

    @classmethod
    def around(cls, value: float, rel_err: float) -> "Interval":
        pad = abs(value) * rel_err
        return cls(
            math.nextafter(value - pad, -math.inf),
            math.nextafter(value + pad, math.inf),
        )

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def __mul__(self, other: "Interval") -> "Interval":
        if not isinstance(other, Interval):
            return NotImplemented
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(
            math.nextafter(min(products), -math.inf),
            math.nextafter(max(products), math.inf),
        )


@dataclass(frozen=True)
class AsymptoticReport:
    """Exponent, constant interval, and empirical diagnostics for one root degree."""

    n: int
    order: int
    exponent: Fraction
    darboux_constant: Interval
    b_at_1: Interval
    final_constant: Interval
    ratios: tuple[tuple[int, float], ...]
    fit_slope: float | None


def exponent(n: int) -> Fraction:
    """The decay exponent (phi(n) - n) / n, always in (-1, 0) for n >= 2."""
    if n < 2:
        raise ValueError(f"root degree must be >= 2, got {n}")
    return Fraction(totient(n) - n, n)


def darboux_constant_q1(n: int, rel_err: float = 1e-9) -> Interval:
    """Interval for the coefficient-growth constant of the coprime factor q1.

    q1 has an algebraic singularity at x = 1 with exponent s = phi(n)/n, and
    its m-th coefficient behaves like K * m**(s-1) with

        K = (prod over d | n, d > 1 of d**(-mu(d)/d)) / Gamma(s).

    Every float factor here (pow, gamma) is accurate to a few ulp, so the
    stated relative budget, default 1e-9, is padding by several orders of
    magnitude; tests validate the interval against exact coefficient ratios.
    """
    if n < 2:
        raise ValueError(f"root degree must be >= 2, got {n}")
    if rel_err <= 0:
        raise ValueError(f"relative error budget must be > 0, got {rel_err}")
    s = Fraction(totient(n), n)
    log_prod = 0.0
    for d in divisors(n):
        mu = moebius(d)
        if d > 1 and mu != 0:
            log_prod += (-mu / d) * math.log(d)
    value = math.exp(log_prod) / math.gamma(float(s))
    return Interval.around(value, rel_err)


def b_at_one(n: int, order: int) -> Interval:
    """Certified bracket for B(1), the value at 1 of the constrained factor.

    Lower end: the exact partial sum of B's coefficients up to ``order``.
    The tail past ``order`` is bounded two ways and the smaller wins:

    * every coefficient of B is at most the matching coefficient of q2, and
      the tail of q2 equals q2(1) minus its exact partial sum, with q2(1)
      bounded above by exponentiating a rational bound on its log at 1;
    * the certified quadratic-decay envelope for q2 (exp_envelope applied to
      log_q2_envelope) gives sum_{m > order} C/m**2 <= C/order.

    The envelope route is far looser but holds for all m unconditionally,
    so it is kept as a cross-check floor.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    prob = RootProblem(n, order)
    partial_b = sum(build_B(prob).coeffs)

    q2_partial = sum(build_q2(prob).coeffs)
    cutoff = max(2 * order, 128)
    log_at_one = sum(
        Fraction(1, r * r) for r in range(2, cutoff + 1) if math.gcd(r, n) > 1
    ) + Fraction(1, cutoff)
    q2_at_one = exp_upper(_round_up(log_at_one)).value
    tail_q2 = q2_at_one - q2_partial

    tail_env = exp_envelope(log_q2_envelope(n)).C / order

    return Interval.from_fractions(partial_b, partial_b + min(tail_q2, tail_env))


def _loglog_slope(points: Sequence[tuple[float, float]]) -> float | None:
    """Unweighted least-squares slope of log y against log x; None below 2 points."""
    if len(points) < 2:
        return None
    xs = [math.log(x) for x, _ in points]
    ys = [math.log(y) for _, y in points]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    if sxx == 0:
        return None
    return sxy / sxx


def final_constant(n: int, order: int) -> AsymptoticReport:
    """Assemble the full asymptotic report p_m ~ C * m**((phi(n)-n)/n).

    C is the outward-rounded product darboux_constant_q1(n) * b_at_one(n),
    the ratio table lists p_m * m**(-exponent), and the log-log fit over
    m in [order/2, order] is a diagnostic only; the exponent itself is exact.
    """
    alpha = exponent(n)
    dar = darboux_constant_q1(n)
    b1 = b_at_one(n, max(order, 1))
    final = dar * b1
    p = build_p(RootProblem(n, order))
    neg_alpha = -float(alpha)
    ratios = tuple(
        (m, float(p[m]) * m**neg_alpha) for m in range(1, order + 1)
    )
    lo = max(1, order // 2)
    fit = _loglog_slope([(m, float(p[m])) for m in range(lo, order + 1) if p[m] > 0])
    return AsymptoticReport(
        n=n,
        order=order,
        exponent=alpha,
        darboux_constant=dar,
        b_at_1=b1,
        final_constant=final,
        ratios=ratios,
        fit_slope=fit,
    )


def transfer_sandwich(
    a: TruncatedSeries,
    b: TruncatedSeries,
    alpha: Rational,
    beta: Rational,
    m: int,
    lower_terms: int = DEFAULT_LOWER_TERMS,
) -> tuple[float, float]:
    """Finite-m bracket for c_m * m**alpha where c = a * b.

    For nonnegative a and b the convolution satisfies, at any fixed m,

        lower = (sum_{i<=K} b_i) * min_{j in [m-K, m]} a_j * m**alpha
        upper = (sum_i b_i) * max_{j in [m-floor(m**beta), m]} a_j * m**alpha
              + (sum_{i>floor(m**beta)} b_i) * max_j a_j * m**alpha

    with K = ``lower_terms`` and all b-sums running over the computed range
    (only i <= m enters c_m, so truncation loses nothing).  Both bounds are
    rigorous for the truncated data; as m grows they squeeze toward
    (sum_i b_i) * lim a_j * j**alpha.
    """
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if not alpha < beta < 1:
        raise ValueError(f"beta must lie in (alpha, 1), got {beta}")
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    if m > min(a.order, b.order):
        raise ValueError(
            f"index {m} beyond computed range {min(a.order, b.order)}"
        )
    ac = a.coeffs
    bc = b.coeffs
    scale = m ** float(alpha)

    k_low = min(lower_terms, m)
    b_head = sum(bc[i] for i in range(k_low + 1))
    a_min = min(ac[j] for j in range(m - k_low, m + 1))
    lower = float(b_head * a_min) * scale

    window = min(int(m ** float(beta)), m)
    b_total = sum(bc[i] for i in range(m + 1))
    b_tail = sum(bc[i] for i in range(window + 1, m + 1))
    a_near = max(ac[j] for j in range(m - window, m + 1))
    a_sup = max(ac[j] for j in range(m + 1))
    upper = float(b_total * a_near + b_tail * a_sup) * scale

    return lower, upper

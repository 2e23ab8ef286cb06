"""Generating series for n-th-root-existence probabilities and their bounding factors.

For a fixed root degree n, the probability series p has coefficient p_k equal
to the probability that a uniform random permutation of k letters is an n-th
power.  It factors exactly as p = q1 * B, where q1 collects the cycle lengths
coprime to n and B the constrained ones; q2 is a simpler series that bounds B
coefficientwise and is the workhorse for tail estimates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numtheory import divisors, moebius, root_divisor
from .series import (
    TruncatedSeries,
    dominates,
    exp_sected,
    exp_series,
    log_series,
    mul,
    pow_rational,
    substitute_monomial,
)


@dataclass(frozen=True)
class RootProblem:
    """Root degree n >= 2 together with the working truncation order."""

    n: int
    order: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"root degree must be >= 2, got {self.n}")
        if self.order < 0:
            raise ValueError(f"truncation order must be >= 0, got {self.order}")


@lru_cache(maxsize=None)
def build_p(prob: RootProblem) -> TruncatedSeries:
    """The probability series: coefficient k is P(uniform sigma in S_k is an n-th power).

    Product over cycle lengths r of the multiplicity-constrained factor
    exp_sected(d, r, 1/r) with d = root_divisor(n, r).  A factor whose first
    nontrivial term sits at x**(r*d) beyond the truncation is identically 1
    and is skipped, which makes the truncation at r <= order exact rather
    than approximate.
    """
    n, order = prob.n, prob.order
    acc = TruncatedSeries.one(order)
    for r in range(1, order + 1):
        d = root_divisor(n, r)
        if r * d <= order:
            acc = mul(acc, exp_sected(d, r, Fraction(1, r), order))
    return acc


@lru_cache(maxsize=None)
def build_q1(prob: RootProblem) -> TruncatedSeries:
    """Closed form of the coprime-cycle factor: prod over d | n of (1 - x**d)**(-mu(d)/d)."""
    n, order = prob.n, prob.order
    acc = TruncatedSeries.one(order)
    for d in divisors(n):
        mu = moebius(d)
        if mu == 0:
            continue
        base = TruncatedSeries.one(order) - TruncatedSeries.monomial(order, d)
        acc = mul(acc, pow_rational(base, Fraction(-mu, d)))
    return acc


@lru_cache(maxsize=None)
def build_q1_exp(prob: RootProblem) -> TruncatedSeries:
    """The coprime-cycle factor built directly: exp(sum over gcd(r, n) = 1 of x**r / r)."""
    n, order = prob.n, prob.order
    coeffs = [Fraction(0)] * (order + 1)
    for r in range(1, order + 1):
        if math.gcd(r, n) == 1:
            coeffs[r] = Fraction(1, r)
    return exp_series(TruncatedSeries._raw(coeffs))


@lru_cache(maxsize=None)
def build_q2_exponent(prob: RootProblem) -> TruncatedSeries:
    """The exponent series of q2: sum over gcd(r, n) > 1 of x**(r * d) / r**2.

    Distinct r may land on the same power of x (the exponents r * d collide
    for composite n), so contributions accumulate.
    """
    n, order = prob.n, prob.order
    coeffs = [Fraction(0)] * (order + 1)
    for r in range(2, order + 1):
        if math.gcd(r, n) > 1:
            m = r * root_divisor(n, r)
            if m <= order:
                coeffs[m] += Fraction(1, r * r)
    return TruncatedSeries._raw(coeffs)


@lru_cache(maxsize=None)
def build_q2(prob: RootProblem) -> TruncatedSeries:
    """The quadratic-decay comparison factor q2 = exp(build_q2_exponent)."""
    return exp_series(build_q2_exponent(prob))


@lru_cache(maxsize=None)
def build_B(prob: RootProblem) -> TruncatedSeries:
    """The constrained-cycle factor: product of exp_sected(d, r, 1/r) over gcd(r, n) > 1.

    Satisfies mul(build_q1, build_B) = build_p exactly, coefficient by
    coefficient, at any truncation order.
    """
    n, order = prob.n, prob.order
    acc = TruncatedSeries.one(order)
    for r in range(2, order + 1):
        if math.gcd(r, n) > 1:
            d = root_divisor(n, r)
            if r * d <= order:
                acc = mul(acc, exp_sected(d, r, Fraction(1, r), order))
    return acc


@dataclass(frozen=True)
class DominationReport:
    """Outcome of the coefficientwise comparisons backing the tail analysis."""

    n: int
    order: int
    product_bounds_p: bool
    q2_bounds_B: bool
    plain_exp_bounds_sected: tuple[tuple[int, bool], ...]

    @property
    def all_ok(self) -> bool:
        return (
            self.product_bounds_p
            and self.q2_bounds_B
            and all(ok for _, ok in self.plain_exp_bounds_sected)
        )


def check_dominations(prob: RootProblem) -> DominationReport:
    """Verify, exactly, the three coefficientwise inequalities used downstream.

    (a) q1 * q2 dominates p; (b) q2 dominates B; (c) exp(x**k / k!) dominates
    the k-sected exponential for each section count k = root_divisor(n, r) > 1
    occurring below the truncation order.
    """
    q1 = build_q1(prob)
    q2 = build_q2(prob)
    p = build_p(prob)
    b = build_B(prob)
    product_ok = dominates(mul(q1, q2), p)
    q2_ok = dominates(q2, b)
    ks = sorted(
        {
            root_divisor(prob.n, r)
            for r in range(2, prob.order + 1)
            if math.gcd(r, prob.n) > 1
        }
    )
    exp_x = exp_series(TruncatedSeries.monomial(prob.order, 1))
    sected_checks = tuple(
        (k, dominates(substitute_monomial(exp_x, k, Fraction(1, math.factorial(k))),
                      exp_sected(k, 1, 1, prob.order)))
        for k in ks
    )
    return DominationReport(
        n=prob.n,
        order=prob.order,
        product_bounds_p=product_ok,
        q2_bounds_B=q2_ok,
        plain_exp_bounds_sected=sected_checks,
    )


def probability_table(prob: RootProblem) -> list[tuple[int, int, Fraction]]:
    """Rows (k, count of n-th powers in S_k, p_k) for k up to the truncation order.

    The count is p_k * k!, which is always a nonnegative integer.
    """
    p = build_p(prob)
    rows = []
    fact = 1
    for k in range(prob.order + 1):
        if k:
            fact *= k
        count = p[k] * fact
        if count.denominator != 1:
            raise ArithmeticError(f"p_{k} * {k}! is not an integer: {count}")
        rows.append((k, count.numerator, p[k]))
    return rows

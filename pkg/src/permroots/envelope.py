"""Certified coefficient envelopes: rational (C, k) bounds of the form c_m <= C / m**k.

An Envelope makes a claim about every coefficient with m >= 1; constant terms
are carried separately by callers.  All arithmetic here is exact rational, and
every transcendental quantity (zeta values, exp) enters only through one-sided
rational bounds, so a propagated envelope is a proof, not an estimate.  The
constants are deliberately conservative: convolution costs a factor
2**(k+1) * zeta(k), and exponentiation compounds it factorially.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .numtheory import divisors
from .series import TruncatedSeries

Rational = Union[int, Fraction]

DEFAULT_ZETA_CUTOFF = 32
DEFAULT_EXP_TERMS = 48


@dataclass(frozen=True)
class Envelope:
    """Claim that a series satisfies c_m <= C / m**k for all m >= 1."""

    C: Fraction
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "C", Fraction(self.C))
        if self.C < 0:
            raise ValueError(f"envelope constant must be >= 0, got {self.C}")
        if not isinstance(self.k, int) or self.k < 2:
            raise ValueError(f"decay exponent must be an integer >= 2, got {self.k}")

    def bound_at(self, m: int) -> Fraction:
        return self.C / m**self.k


@dataclass(frozen=True)
class RationalBound:
    """A rational value together with the quantity it bounds from above."""

    value: Fraction
    target: str


def zeta_upper(k: int, cutoff: int = DEFAULT_ZETA_CUTOFF) -> RationalBound:
    """Rational upper bound on zeta(k): partial sum plus the integral tail.

    sum_{i<=cutoff} i**-k + cutoff**(1-k) / (k-1); nonincreasing in the cutoff.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"zeta_upper needs an integer k >= 2, got {k}")
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    partial = zeta_lower(k, cutoff)
    tail = Fraction(1, cutoff ** (k - 1) * (k - 1))
    return RationalBound(value=partial + tail, target=f"zeta({k})")


def zeta_lower(k: int, cutoff: int = DEFAULT_ZETA_CUTOFF) -> Fraction:
    """Plain partial sum sum_{i<=cutoff} i**-k, a lower bound on zeta(k)."""
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"zeta_lower needs an integer k >= 2, got {k}")
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    return sum(Fraction(1, i**k) for i in range(1, cutoff + 1))


def exp_upper(x: Rational, terms: int = DEFAULT_EXP_TERMS) -> RationalBound:
    """Rational upper bound on exp(x) for x >= 0.

    Partial sum of the first ``terms + 1`` Taylor terms plus the geometric
    tail bound x**(terms+1)/(terms+1)! * 1/(1 - x/(terms+2)); the tail
    comparison is only valid for x < terms + 2.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"exp_upper requires x >= 0, got {x}")
    if terms < 0:
        raise ValueError(f"terms must be >= 0, got {terms}")
    if x >= terms + 2:
        raise ValueError(
            f"geometric tail bound invalid: need x < terms + 2, "
            f"got x~{x.numerator // x.denominator}, terms={terms}"
        )
    total = Fraction(1)
    term = Fraction(1)
    for i in range(1, terms + 1):
        term = term * x / i
        total += term
    tail = term * x / (terms + 1) * (terms + 2) / (terms + 2 - x)
    return RationalBound(value=total + tail, target=f"exp({x.numerator}/{x.denominator})")


def _round_up(x: Fraction, bits: int = 64) -> Fraction:
    """Smallest rational >= x with denominator 2**bits.

    Exponent arguments assembled from long partial sums can carry enormous
    denominators; rounding them up keeps exp_upper cheap while preserving the
    upper-bound direction.
    """
    scale = 1 << bits
    return Fraction(math.ceil(x * scale), scale)


def conv_envelope(
    a: Envelope, b: Envelope, zeta_cutoff: int = DEFAULT_ZETA_CUTOFF
) -> Envelope:
    """Envelope for the Cauchy product of two zero-constant-term series.

    Splitting the convolution at m/2 and bounding each half by its partial
    zeta sum gives the constant 2**(k+1) * A * B * zeta(k); zeta enters as a
    rational upper bound so the result stays one-sided.
    """
    if a.k != b.k:
        raise ValueError(f"mismatched decay exponents: {a.k} != {b.k}")
    k = a.k
    c = 2 ** (k + 1) * a.C * b.C * zeta_upper(k, zeta_cutoff).value
    return Envelope(c, k)


def pow_envelope(
    f: Envelope, n: int, zeta_cutoff: int = DEFAULT_ZETA_CUTOFF
) -> Envelope:
    """Envelope for the n-th power: C**n * 2**((k+1)(n-1)) * zeta(k)**(n-1).

    Folding conv_envelope n-1 times gives exactly this constant, and n = 1
    returns the input untouched.
    """
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    if n == 1:
        return f
    k = f.k
    zu = zeta_upper(k, zeta_cutoff).value
    c = f.C**n * 2 ** ((k + 1) * (n - 1)) * zu ** (n - 1)
    return Envelope(c, k)


def exp_envelope(
    f: Envelope,
    zeta_cutoff: int = DEFAULT_ZETA_CUTOFF,
    exp_terms: int | None = None,
) -> Envelope:
    """Envelope for exp of a series satisfying ``f`` (constant term of exp excluded).

    Summing pow_envelope(f, n) / n! over n >= 1 telescopes to the constant
    exp(2**(k+1) C zeta(k)) / (2**(k+1) zeta(k)).  Soundness of that quotient
    requires opposite-sided zeta bounds: the exponent takes the upper bound,
    the denominator the plain partial sum.  ``exp_terms`` defaults to enough
    terms for the tail bound to be valid at the resulting exponent.
    """
    k = f.k
    zu = zeta_upper(k, zeta_cutoff).value
    zl = zeta_lower(k, zeta_cutoff)
    scale = 2 ** (k + 1)
    x = _round_up(scale * f.C * zu)
    if exp_terms is None:
        exp_terms = max(DEFAULT_EXP_TERMS, int(math.ceil(1.2 * float(x))) + 8)
    bound = exp_upper(x, exp_terms).value
    return Envelope(bound / (scale * zl), k)


def empirical_envelope(f: TruncatedSeries, k: int) -> Envelope:
    """Best constant observed over the computed range: C = max f_m * m**k.

    This is a measurement over 1 <= m <= f.order, not a proof for all m;
    certification requires pairing it with an analytic envelope.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"decay exponent must be an integer >= 2, got {k}")
    best = Fraction(0)
    for m in range(1, f.order + 1):
        c = f[m]
        if c < 0:
            raise ValueError(f"negative coefficient at m={m}; envelopes need c_m >= 0")
        scaled = c * m**k
        if scaled > best:
            best = scaled
    return Envelope(best, k)


def log_q2_envelope(n: int) -> Envelope:
    """Certified (C, 2) envelope for the exponent series of q2.

    For fixed m, each divisor d >= 2 of n admits at most one cycle length r
    with r * d = m, contributing 1/r**2 = d**2/m**2; summing d**2 over the
    divisors is therefore sound for every m >= 1.
    """
    if n < 2:
        raise ValueError(f"root degree must be >= 2, got {n}")
    c = sum(d * d for d in divisors(n) if d >= 2)
    return Envelope(Fraction(c), 2)

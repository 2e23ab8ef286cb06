"""Small-integer number theory shared by the series, counting, and bound modules.

Inputs here are tiny (root degrees and cycle lengths up to a few hundred), so
trial division is all the machinery needed.
"""

from __future__ import annotations


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n >= 1`` as (prime, exponent) pairs, ascending.

    ``factorize(1)`` is the empty list.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out: list[tuple[int, int]] = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            out.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def moebius(d: int) -> int:
    """0 if d has a squared prime factor, else (-1)**(number of prime factors)."""
    if d < 1:
        raise ValueError(f"moebius requires d >= 1, got {d}")
    factors = factorize(d)
    if any(a > 1 for _, a in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def totient(n: int) -> int:
    """Count of residues 1 <= r <= n with gcd(r, n) = 1."""
    if n < 1:
        raise ValueError(f"totient requires n >= 1, got {n}")
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n >= 1``, ascending."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    out = [1]
    for p, a in factorize(n):
        out = [d * p**e for d in out for e in range(a + 1)]
    return sorted(out)


def root_divisor(n: int, r: int) -> int:
    """The largest divisor of n supported on primes dividing r.

    A cycle length r contributes a constraint to n-th-root existence: the
    number of r-cycles must be a multiple of this value.  Equals 1 exactly
    when gcd(r, n) = 1, and depends on r only through r mod n (with the
    convention that r = 0 mod n picks up every prime of n).
    """
    if n < 2:
        raise ValueError(f"root_divisor requires n >= 2, got n={n}")
    if r < 1:
        raise ValueError(f"root_divisor requires r >= 1, got r={r}")
    d = 1
    for p, a in factorize(n):
        if r % p == 0:
            d *= p**a
    return d

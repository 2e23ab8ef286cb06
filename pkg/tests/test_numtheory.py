import math
from fractions import Fraction

import pytest

from permroots.numtheory import divisors, factorize, moebius, root_divisor, totient


def test_factorize_examples():
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(97) == [(97, 1)]


def test_factorize_reconstructs_input_with_ascending_primes():
    for n in range(1, 400):
        fac = factorize(n)
        prod = 1
        for p, a in fac:
            assert a >= 1
            assert factorize(p) == [(p, 1)]
            prod *= p**a
        assert prod == n
        assert [p for p, _ in fac] == sorted(p for p, _ in fac)


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_moebius_examples():
    assert moebius(1) == 1
    assert moebius(6) == 1
    assert moebius(4) == 0


def test_moebius_rejects_zero():
    with pytest.raises(ValueError):
        moebius(0)


def test_moebius_multiplicative_on_coprime_pairs():
    for a in range(1, 40):
        for b in range(1, 40):
            if math.gcd(a, b) == 1:
                assert moebius(a * b) == moebius(a) * moebius(b)


def test_moebius_divisor_sum_equals_totient_ratio():
    for n in range(1, 61):
        s = sum(Fraction(moebius(d), d) for d in divisors(n))
        assert s == Fraction(totient(n), n)


def test_totient_examples():
    assert totient(1) == 1
    assert totient(2) == 1
    assert totient(12) == 4


def test_totient_rejects_zero():
    with pytest.raises(ValueError):
        totient(0)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(97) == [1, 97]
    with pytest.raises(ValueError):
        divisors(0)


def test_root_divisor_examples():
    assert root_divisor(2, 3) == 1
    assert root_divisor(2, 4) == 2
    assert root_divisor(12, 10) == 4


def test_root_divisor_rejects_bad_arguments():
    with pytest.raises(ValueError):
        root_divisor(1, 3)
    with pytest.raises(ValueError):
        root_divisor(0, 3)
    with pytest.raises(ValueError):
        root_divisor(2, 0)


def test_root_divisor_structure():
    # Cross-checked against the alternative characterization as the smallest
    # divisor d of n with gcd(r, n/d) = 1, plus the reduction mod n.
    for n in range(2, 61):
        divs = divisors(n)
        for r in range(1, 601):
            d = root_divisor(n, r)
            assert n % d == 0
            assert math.gcd(r, n // d) == 1
            assert d == min(c for c in divs if math.gcd(r, n // c) == 1)
            assert (d == 1) == (math.gcd(r, n) == 1)
            if r % n >= 1:
                assert d == root_divisor(n, r % n)
            else:
                assert d == n

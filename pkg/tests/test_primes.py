import random
from functools import cmp_to_key

import pytest
from hypothesis import given

from conftest import gaussian_ints
from gaussforms.gaussian import UNITS, GaussianInt, exact_div, in_sector, norm
from gaussforms.integers import factor_integer, is_prime, primes_below, sqrt_minus_one
from gaussforms.primes import (
    CanonicalFactorization,
    PrimeClass,
    classify,
    compare_primes,
    factorize,
    is_canonical_prime,
    nu,
    primes_up_to,
)

G = GaussianInt


def naive_canonical_primes(norm_bound):
    """Sector elements with no divisor of intermediate norm, by brute force."""
    r = int(norm_bound**0.5) + 1
    box = [G(a, b) for a in range(-r, r + 1) for b in range(-r, r + 1) if 0 < a * a + b * b <= norm_bound]
    found = []
    for z in box:
        if not in_sector(z) or norm(z) < 2:
            continue
        if not any(1 < norm(d) < norm(z) and d.divides(z) for d in box):
            found.append(z)
    return sorted(found, key=lambda p: (norm(p), p.im))


def naive_factorization(z, prime_list):
    factors = []
    for p in prime_list:
        alpha = 0
        while p.divides(z):
            z = exact_div(z, p)
            alpha += 1
        if alpha:
            factors.append((p, alpha))
    assert z.is_unit()
    return UNITS.index(z), factors


def test_integer_helpers():
    assert [n for n in range(60) if is_prime(n)] == primes_below(59)
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)
    assert is_prime(18446744073709551557)  # largest prime below 2**64
    assert factor_integer(2**10 * 3**4 * 1000003**2) == {2: 10, 3: 4, 1000003: 2}
    assert factor_integer(999999000001 * 1000003) == {1000003: 1, 999999000001: 1}
    assert factor_integer(1) == {}
    for q in (5, 13, 10009):
        assert sqrt_minus_one(q) ** 2 % q == q - 1


@pytest.mark.parametrize("z, expected", [(G(1, 1), True), (G(2, -1), True), (G(5), False),
                                         (G(3), True), (G(-3), False), (G(0, 3), False), (G(1), False)])
def test_is_canonical_prime(z, expected):
    assert is_canonical_prime(z) is expected


def test_primes_up_to_matches_brute_force():
    assert primes_up_to(400) == naive_canonical_primes(400)


def test_primes_up_to_examples():
    assert primes_up_to(1) == []
    assert primes_up_to(2) == [G(1, 1)]
    assert primes_up_to(5) == [G(1, 1), G(2, -1), G(2, 1)]


def test_factorize_examples():
    assert factorize(5) == CanonicalFactorization(0, ((G(2, -1), 1), (G(2, 1), 1)))
    assert factorize(G(0, 1)) == CanonicalFactorization(1, ())
    # 2 = i^3 (1+i)^2
    assert factorize(2) == CanonicalFactorization(3, ((G(1, 1), 2),))
    assert str(factorize(2)) == "i^3 * (1+i)^2"
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_against_trial_division():
    plist = naive_canonical_primes(400)
    for a in range(-14, 15):
        for b in range(-14, 15):
            z = G(a, b)
            if z.is_zero() or norm(z) > 400:
                continue
            s, factors = naive_factorization(z, plist)
            assert factorize(z) == CanonicalFactorization(s, tuple(factors))


def test_reconstruction_up_to_norm_1e4():
    for a in range(-100, 101):
        for b in range(-100, 101):
            z = G(a, b)
            if z.is_zero() or norm(z) > 10**4:
                continue
            f = factorize(z)
            assert f.value() == z
            keys = [(norm(p), p.im) for p, _ in f.factors]
            assert keys == sorted(set(keys))
            assert all(is_canonical_prime(p) and alpha > 0 for p, alpha in f.factors)


@given(gaussian_ints(10**5, nonzero=True))
def test_factorize_is_deterministic(z):
    assert factorize(z) == factorize(z)
    assert factorize(z).value() == z


@pytest.mark.parametrize("z, expected", [(G(0, 1), 0), (G(1, 1), 1), (G(5), 2), (G(-1), 0), (G(2), 2)])
def test_nu_examples(z, expected):
    assert nu(z) == expected


def test_nu_unit_and_prime_values():
    assert all(nu(u) == 0 for u in UNITS)
    for p in primes_up_to(2000):
        assert nu(p) == 1
        for u in UNITS:
            assert nu(u * p) == 1


@given(gaussian_ints(1000, nonzero=True), gaussian_ints(1000, nonzero=True))
def test_nu_additive(a, b):
    assert nu(a * b) == nu(a) + nu(b)


def test_nu_strict_on_proper_divisors():
    rng = random.Random(3)
    for _ in range(300):
        b = G(rng.randint(-300, 300), rng.randint(-300, 300))
        if b.is_zero():
            continue
        f = factorize(b)
        a = UNITS[rng.randrange(4)]
        for p, alpha in f.factors:
            a = a * p ** rng.randint(0, alpha)
        assert a.divides(b)
        if not b.divides(a):
            assert nu(a) < nu(b)
        else:
            assert nu(a) == nu(b)


def test_compare_primes():
    assert compare_primes(G(1, 1), G(2, 1)) == -1
    assert compare_primes(G(2, -1), G(2, 1)) == -1
    assert compare_primes(G(2, 1), G(2, -1)) == 1
    assert compare_primes(G(3), G(3)) == 0
    with pytest.raises(ValueError):
        compare_primes(G(5), G(3))


def test_compare_primes_is_strict_total_order():
    plist = primes_up_to(10**4)
    assert sorted(plist, key=cmp_to_key(compare_primes)) == plist
    rng = random.Random(4)
    for _ in range(2000):
        p, q, r = (rng.choice(plist) for _ in range(3))
        assert compare_primes(p, q) == -compare_primes(q, p)
        assert (compare_primes(p, q) == 0) == (p == q)
        if compare_primes(p, q) < 0 and compare_primes(q, r) < 0:
            assert compare_primes(p, r) < 0


@pytest.mark.parametrize("p, cls", [(G(1, 1), PrimeClass.B), (G(2, 1), PrimeClass.C), (G(3), PrimeClass.A),
                                    (G(4, 1), PrimeClass.A), (G(3, 2), PrimeClass.C)])
def test_classify_examples(p, cls):
    assert classify(p) is cls


def test_classify_rejects_non_primes():
    with pytest.raises(ValueError):
        classify(5)
    with pytest.raises(ValueError):
        classify(G(0, 3))


def test_partition_is_total_up_to_1e4():
    for p in primes_up_to(10**4):
        r = norm(p) % 8
        assert r in (1, 2, 5)
        cls = classify(p)
        assert [r == 1, p == G(1, 1), r == 5].count(True) == 1
        assert cls is {1: PrimeClass.A, 2: PrimeClass.B, 5: PrimeClass.C}[r]

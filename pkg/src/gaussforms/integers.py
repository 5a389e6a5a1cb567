"""Rational-integer helpers: primality, factorization, sieving, sqrt(-1) mod q."""

from __future__ import annotations

from collections import Counter
from math import gcd, isqrt

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# First 13 prime bases are a deterministic witness set below this bound.
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_division_is_prime(n: int) -> bool:
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test for rational integers."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _MR_DETERMINISTIC_LIMIT:
        return _miller_rabin(n, _SMALL_PRIMES)
    if not _miller_rabin(n, _SMALL_PRIMES):
        return False
    return _trial_division_is_prime(n)


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    c = 1
    while True:
        y, m, g, r, q = 2, 128, 1, 1, 1
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def factor_integer(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}`` (sorted keys)."""
    if n < 1:
        raise ValueError("factor_integer needs a positive integer")
    found: Counter[int] = Counter()
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            found[p] += 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            found[m] += 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _pollard_brent(m)
        stack += [d, m // d]
    return dict(sorted(found.items()))


def primes_below(limit: int) -> list[int]:
    """All rational primes ``<= limit`` (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def sqrt_minus_one(q: int) -> int:
    """Some ``r`` with ``r*r == -1 (mod q)`` for a prime ``q == 1 (mod 4)``."""
    if q % 4 != 1:
        raise ValueError(f"-1 is not a square modulo {q}")
    for c in range(2, q):
        r = pow(c, (q - 1) // 4, q)
        if r * r % q == q - 1:
            return r
    raise ArithmeticError(f"{q} is not prime")

"""Canonical Gaussian primes: recognition, factorization, valuation, ordering.

A canonical prime is the associate of a Gaussian prime that lies in the
sector ``-pi/4 < Arg <= pi/4``. They are well-ordered by norm, ties
broken by the imaginary part. Every nonzero ``z`` is uniquely
``i**s * p1**a1 * ... * pk**ak`` with canonical ``p1 < ... < pk``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .gaussian import GaussianInt, IntLike, canonicalize, exact_div, gcd, in_sector, unit
from .integers import factor_integer, is_prime, primes_below, sqrt_minus_one

ONE_PLUS_I = GaussianInt(1, 1)


class PrimeClass(str, enum.Enum):
    """Residue class of a canonical prime's norm modulo 8."""

    A = "A"  # norm == 1 (mod 8)
    B = "B"  # the prime 1+i
    C = "C"  # norm == 5 (mod 8)

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CanonicalFactorization:
    s: int
    factors: tuple[tuple[GaussianInt, int], ...]

    def value(self) -> GaussianInt:
        z = unit(self.s)
        for p, alpha in self.factors:
            z = z * p**alpha
        return z

    def nu(self) -> int:
        return sum(alpha for _, alpha in self.factors)

    def __str__(self) -> str:
        parts = [f"i^{self.s}"]
        parts += [f"({p})^{alpha}" for p, alpha in self.factors]
        return " * ".join(parts)

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "factors": [{"p": str(p), "alpha": alpha} for p, alpha in self.factors],
        }


def prime_key(p: GaussianInt) -> tuple[int, int]:
    """Sort key realizing the well-order: norm first, then imaginary part."""
    return (p.norm(), p.im)


def is_canonical_prime(z: IntLike) -> bool:
    z = GaussianInt.coerce(z)
    if z.is_zero() or not in_sector(z):
        return False
    if is_prime(z.norm()):
        return True
    # inert rational primes q == 3 (mod 4); in the sector they are q itself
    return z.im == 0 and z.re % 4 == 3 and is_prime(z.re)


def _require_prime(p: IntLike) -> GaussianInt:
    p = GaussianInt.coerce(p)
    if not is_canonical_prime(p):
        raise ValueError(f"{p} is not a canonical Gaussian prime")
    return p


@lru_cache(maxsize=None)
def primes_over(q: int) -> tuple[GaussianInt, ...]:
    """Canonical primes dividing the rational prime ``q``, in well-order."""
    if q == 2:
        return (ONE_PLUS_I,)
    if q % 4 == 3:
        return (GaussianInt(q, 0),)
    pi = gcd(q, GaussianInt(sqrt_minus_one(q), 1))
    other = canonicalize(pi.conjugate())[1]
    return tuple(sorted((pi, other), key=prime_key))


def factorize(z: IntLike) -> CanonicalFactorization:
    """Canonical factorization ``z = i**s * prod(p**alpha)``."""
    z = GaussianInt.coerce(z)
    if z.is_zero():
        raise ValueError("cannot factorize 0")
    factors: list[tuple[GaussianInt, int]] = []
    rest = z
    for q, e in factor_integer(z.norm()).items():
        if q % 4 == 3:
            # inert: q**2 divides the norm once per factor of q
            qq = GaussianInt(q, 0)
            for _ in range(e // 2):
                rest = exact_div(rest, qq)
            factors.append((qq, e // 2))
            continue
        for p in primes_over(q):
            alpha = 0
            while e and p.divides(rest):
                rest = exact_div(rest, p)
                alpha += 1
                e -= 1
            if alpha:
                factors.append((p, alpha))
    if not rest.is_unit():
        raise AssertionError(f"factorization of {z} left cofactor {rest}")
    s = canonicalize(rest)[0]
    factors.sort(key=lambda f: prime_key(f[0]))
    return CanonicalFactorization(s, tuple(factors))


def nu(z: IntLike) -> int:
    """Total multiplicity of canonical primes in ``z`` (0 exactly on units)."""
    return factorize(z).nu()


def compare_primes(p: IntLike, q: IntLike) -> int:
    """-1 if ``p`` precedes ``q``, 0 if equal, 1 if ``q`` precedes ``p``."""
    kp = prime_key(_require_prime(p))
    kq = prime_key(_require_prime(q))
    return (kp > kq) - (kp < kq)


def classify(p: IntLike) -> PrimeClass:
    p = _require_prime(p)
    if p == ONE_PLUS_I:
        return PrimeClass.B
    r = p.norm() % 8
    if r == 1:
        return PrimeClass.A
    if r == 5:
        return PrimeClass.C
    raise AssertionError(f"canonical prime {p} has norm {p.norm()} == {r} mod 8")


def primes_up_to(norm_bound: int) -> list[GaussianInt]:
    """All canonical primes with norm at most ``norm_bound``, in well-order."""
    found: list[GaussianInt] = []
    for q in primes_below(norm_bound):
        if q % 4 == 3:
            if q * q <= norm_bound:
                found.append(GaussianInt(q, 0))
        else:
            found.extend(primes_over(q))
    found.sort(key=prime_key)
    return found

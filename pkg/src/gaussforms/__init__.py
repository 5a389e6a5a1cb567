"""Constructive representations by the universal form x^2 + iy^2 + z^2 + iw^2 over Z[i]."""

from .binary import (
    BinarySolution,
    ClassCWitness,
    descend,
    niven_mordell_representable,
    represent_class_C,
    two_squares,
)
from .gaussian import GaussianInt, canonicalize, divmod_centered, gcd, mod_pow, norm, parse_gaussian
from .primes import CanonicalFactorization, PrimeClass, classify, factorize, nu, primes_up_to
from .quaternary import QuatRep, compose, evaluate, represent

__version__ = "0.1.0"

__all__ = [
    "BinarySolution",
    "CanonicalFactorization",
    "ClassCWitness",
    "GaussianInt",
    "PrimeClass",
    "QuatRep",
    "canonicalize",
    "classify",
    "compose",
    "descend",
    "divmod_centered",
    "evaluate",
    "factorize",
    "gcd",
    "mod_pow",
    "niven_mordell_representable",
    "norm",
    "nu",
    "parse_gaussian",
    "primes_up_to",
    "represent",
    "represent_class_C",
    "two_squares",
]

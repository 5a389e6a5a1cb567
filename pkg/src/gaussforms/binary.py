"""The binary form x^2 + i*y^2 and sums of two squares over Z[i].

The main entry point is :func:`descend`, which writes any canonical prime
with norm == 1 (mod 8), or 1+i, exactly as ``x**2 + i*y**2``. It starts from
a square root of ``-i`` modulo ``p``, which gives ``x**2 + i = p*z``, shrinks
the cofactor below ``p`` and then cancels the prime factors of ``z`` one at a
time using representations of those (smaller) primes.

Primes with norm == 5 (mod 8) are not of this shape; they are instead sums of
two squares up to a factor ``i`` (:func:`represent_class_C`).
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Optional

from .gaussian import (
    I,
    ONE,
    UNITS,
    GaussianInt,
    IntLike,
    canonicalize,
    exact_div,
    gcd,
    mod,
    mod_pow,
)
from .primes import ONE_PLUS_I, PrimeClass, classify, factorize, is_canonical_prime


def binary_value(x: GaussianInt, y: GaussianInt) -> GaussianInt:
    return x * x + I * (y * y)


@dataclass(frozen=True)
class BinarySolution:
    """A witness ``x**2 + i*y**2 == p*z`` with ``gcd(x, y)`` a unit."""

    x: GaussianInt
    y: GaussianInt
    z: GaussianInt
    p: GaussianInt

    def __post_init__(self):
        if binary_value(self.x, self.y) != self.p * self.z:
            raise ValueError(f"({self.x})^2 + i({self.y})^2 != ({self.p})({self.z})")
        if self.x.is_zero() and self.y.is_zero() or not gcd(self.x, self.y).is_unit():
            raise ValueError(f"{self.x} and {self.y} are not coprime")


@dataclass(frozen=True)
class ClassCWitness:
    """``p == x**2 + y**2``, or ``p == i*(x**2 + y**2)`` when ``twisted``."""

    x: GaussianInt
    y: GaussianInt
    twisted: bool

    def value(self) -> GaussianInt:
        v = self.x * self.x + self.y * self.y
        return I * v if self.twisted else v


def _require_class(p: IntLike, allowed: set) -> tuple[GaussianInt, PrimeClass]:
    p = GaussianInt.coerce(p)
    cls = classify(p)
    if cls not in allowed:
        wanted = "/".join(sorted(c.value for c in allowed))
        raise ValueError(f"{p} is a class-{cls} prime; expected class {wanted}")
    return p, cls


def i_is_quadratic_residue(p: IntLike) -> bool:
    """Whether ``x**2 == i (mod p)`` is solvable, by Euler's criterion in Z[i]/(p)."""
    p = GaussianInt.coerce(p)
    if not is_canonical_prime(p):
        raise ValueError(f"{p} is not a canonical Gaussian prime")
    if p == ONE_PLUS_I:
        return True
    return mod_pow(I, (p.norm() - 1) // 2, p) == mod(ONE, p)


def _residue_candidates():
    for total in itertools.count(1):
        for b in range(total + 1):
            yield GaussianInt(total - b, b)


def _non_residue(p: GaussianInt) -> GaussianInt:
    half = (p.norm() - 1) // 2
    minus_one = mod(-1, p)
    for c in _residue_candidates():
        if mod_pow(c, half, p) == minus_one:
            return c
    raise AssertionError("unreachable")  # pragma: no cover


def sqrt_of_i_mod(p: IntLike) -> GaussianInt:
    """A centered residue ``r`` with ``r**2 == i (mod p)`` for a class-A prime.

    Tonelli-Shanks in the field Z[i]/(p), whose multiplicative group has
    order ``norm(p) - 1``.
    """
    p, _ = _require_class(p, {PrimeClass.A})
    one = mod(ONE, p)
    a = mod(I, p)
    q, s = p.norm() - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    c = mod_pow(_non_residue(p), q, p)
    t = mod_pow(a, q, p)
    r = mod_pow(a, (q + 1) // 2, p)
    m = s
    while t != one:
        k, t2 = 0, t
        while t2 != one:
            t2 = mod(t2 * t2, p)
            k += 1
            if k == m:
                raise ArithmeticError(f"i is not a square modulo {p}")
        b = mod_pow(c, 1 << (m - k - 1), p)
        m = k
        c = mod(b * b, p)
        t = mod(t * c, p)
        r = mod(r * b, p)
    if mod(r * r, p) != a:
        raise ArithmeticError(f"square root of i modulo {p} failed verification")
    return r


def initial_solution(p: IntLike) -> BinarySolution:
    """``x0**2 + i*1**2 == p*z0`` from a square root of ``-i`` modulo ``p``."""
    p, cls = _require_class(p, {PrimeClass.A, PrimeClass.B})
    if cls is PrimeClass.B:
        return BinarySolution(ONE, ONE, ONE, p)
    # (i*r)^2 = -r^2 == -i
    x0 = mod(I * sqrt_of_i_mod(p), p)
    z0 = exact_div(binary_value(x0, ONE), p)
    return BinarySolution(x0, ONE, z0, p)


def reduce_solution(sol: BinarySolution) -> BinarySolution:
    """Replace ``x, y`` by centered residues mod ``p`` so that ``norm(z) < norm(p)``.

    A solution that already meets the bound is returned unchanged.
    """
    p = sol.p
    if sol.z.norm() < p.norm():
        return sol
    rx, ry = mod(sol.x, p), mod(sol.y, p)
    if rx.is_zero() and ry.is_zero():
        raise ValueError(f"{p} divides both coordinates; pick another root")
    g = gcd(rx, ry)
    if not g.is_unit():
        rx, ry = exact_div(rx, g), exact_div(ry, g)
    z = exact_div(binary_value(rx, ry), p)
    if z.norm() >= p.norm():
        raise ArithmeticError(f"reduced cofactor {z} is not below {p}")
    return BinarySolution(rx, ry, z, p)


def descent_step(
    sol: BinarySolution, q: IntLike, rep: tuple[GaussianInt, GaussianInt]
) -> BinarySolution:
    """Cancel one prime ``q | sol.z`` using ``rep = (u, v)`` with ``u**2 + i*v**2 == q``.

    The product identity
    ``(x^2 + i y^2)(u^2 + i v^2) == (xu -+ i yv)^2 + i(xv +- uy)^2``
    holds for both sign choices; the one with ``q | xu -+ i yv`` lets both
    new coordinates be divided by ``q``, and then by their gcd.
    """
    q = GaussianInt.coerce(q)
    if not is_canonical_prime(q):
        raise ValueError(f"{q} is not a canonical Gaussian prime")
    if sol.z.is_unit():
        raise ValueError("cofactor is already a unit")
    if not q.divides(sol.z):
        raise ValueError(f"{q} does not divide the cofactor {sol.z}")
    u, v = rep
    if binary_value(u, v) != q:
        raise ValueError(f"({u})^2 + i({v})^2 != {q}")
    x, y = sol.x, sol.y
    for sign in (1, -1):
        big_x = x * u - sign * (I * y * v)
        if q.divides(big_x):
            big_y = x * v + sign * (u * y)
            break
    else:
        raise ArithmeticError(f"{q} divides neither x*u + i*y*v nor x*u - i*y*v")
    nx, ny = exact_div(big_x, q), exact_div(big_y, q)
    d = gcd(nx, ny)
    if not d.is_unit():
        nx, ny = exact_div(nx, d), exact_div(ny, d)
    z = exact_div(binary_value(nx, ny), sol.p)
    return BinarySolution(nx, ny, z, sol.p)


def absorb_unit_binary(x: IntLike, y: IntLike, s: int) -> tuple[GaussianInt, GaussianInt]:
    """``(x', y')`` with ``x'^2 + i y'^2 == i**s * (x^2 + i y^2)``."""
    x, y = GaussianInt.coerce(x), GaussianInt.coerce(y)
    for _ in range(s % 4):
        x, y = I * y, x
    return x, y


_descent_memo: dict[GaussianInt, tuple[GaussianInt, GaussianInt]] = {}
_descent_lock = threading.Lock()


def descend(p: IntLike) -> tuple[GaussianInt, GaussianInt]:
    """Exact ``(x, y)`` with ``x**2 + i*y**2 == p`` for a class-A or class-B prime."""
    p, _ = _require_class(p, {PrimeClass.A, PrimeClass.B})
    with _descent_lock:
        hit = _descent_memo.get(p)
    if hit is not None:
        return hit
    result = _descend(p)
    with _descent_lock:
        return _descent_memo.setdefault(p, result)


def descent_trace(p: IntLike) -> list[BinarySolution]:
    """Every intermediate solution visited while descending on ``p``."""
    p, cls = _require_class(p, {PrimeClass.A, PrimeClass.B})
    if cls is PrimeClass.B:
        return [initial_solution(p)]
    sol = initial_solution(p)
    trace = [sol]
    sol = reduce_solution(sol)
    if sol is not trace[-1]:
        trace.append(sol)
    while not sol.z.is_unit():
        q = factorize(sol.z).factors[0][0]
        if classify(q) is PrimeClass.C:
            raise ArithmeticError(f"class-C prime {q} divides x^2 + i*y^2 with coprime x, y")
        sol = descent_step(sol, q, descend(q))
        trace.append(sol)
    return trace


def _descend(p: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    if p == ONE_PLUS_I:
        return ONE, ONE
    final = descent_trace(p)[-1]
    s = canonicalize(final.z)[0]
    x, y = absorb_unit_binary(final.x, final.y, -s)
    if binary_value(x, y) != p:
        raise ArithmeticError(f"descent on {p} produced a bad witness ({x}, {y})")
    return x, y


def niven_mordell_representable(a: int, b: int) -> bool:
    """Whether ``a + 2bi`` is a sum of two squares in Z[i]."""
    return not (a % 4 == 2 and b % 2 == 1)


def _divisors(t: GaussianInt):
    f = factorize(t)
    ranges = [range(alpha + 1) for _, alpha in f.factors]
    for exps in itertools.product(*ranges):
        d = ONE
        for (p, _), k in zip(f.factors, exps):
            d = d * p**k
        for u in UNITS:
            yield u * d


def two_squares(t: IntLike) -> Optional[tuple[GaussianInt, GaussianInt]]:
    """``(x, y)`` with ``x**2 + y**2 == t``, or None when no such pair exists.

    Uses ``x**2 + y**2 == (x + iy)(x - iy)``: every solution comes from a
    factorization ``t == alpha * beta`` with ``x = (alpha + beta)/2`` and
    ``y = (alpha - beta)/(2i)``, so scanning divisors of ``t`` is complete.
    """
    t = GaussianInt.coerce(t)
    if t.is_zero():
        return GaussianInt(0), GaussianInt(0)
    two, two_i = GaussianInt(2), GaussianInt(0, 2)
    for alpha in _divisors(t):
        beta = exact_div(t, alpha)
        if two.divides(alpha + beta) and two_i.divides(alpha - beta):
            return exact_div(alpha + beta, two), exact_div(alpha - beta, two_i)
    return None


def represent_class_C(p: IntLike) -> ClassCWitness:
    """Write a class-C prime as ``x**2 + y**2`` or ``i*(x**2 + y**2)``.

    Only unit divisors need to be tried: for a prime target the factor pairs
    ``alpha * beta`` are a unit and a unit multiple of the target.
    """
    p, _ = _require_class(p, {PrimeClass.C})
    two, two_i = GaussianInt(2), GaussianInt(0, 2)
    for u in UNITS:
        u_inv = exact_div(ONE, u)
        for target in (p, -I * p):
            other = u_inv * target
            if two.divides(u + other) and two_i.divides(u - other):
                x = exact_div(u + other, two)
                y = exact_div(u - other, two_i)
                if x * x + y * y == target:
                    return ClassCWitness(x, y, twisted=target != p)
    raise ArithmeticError(f"no two-square witness for class-C prime {p}")

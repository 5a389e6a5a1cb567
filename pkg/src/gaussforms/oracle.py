"""Brute-force oracles and exhaustive sweeps that certify the constructive code.

The oracles never call the constructive solvers: they scan boxes of Gaussian
integers or complete residue systems directly. Sweeps pair the two routes
over every instance up to a bound and collect disagreements in a
:class:`SweepReport`. Sweeps can be sharded over worker processes; the
report does not depend on the number of workers.
"""

from __future__ import annotations

import bisect
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt
from typing import Any, Callable, Optional, Sequence

from . import binary, quaternary, ramanujan
from .gaussian import I, UNITS, GaussianInt, IntLike, exact_div, gcd
from .primes import PrimeClass, classify, factorize, nu, primes_up_to
from .quaternary import CompositionCoefficients, QuatRep, compose_general

DEFAULT_SEED = 0


@dataclass
class SweepReport:
    name: str
    bounds: dict[str, Any]
    instances_checked: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, include_elapsed: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "bounds": dict(sorted(self.bounds.items())),
            "instances_checked": self.instances_checked,
            "passed": self.passed,
            "counts": dict(sorted(self.counts.items())),
            "failures": [
                {"input": i, "expected": e, "got": g} for i, e, g in sorted(self.failures)
            ],
        }
        if include_elapsed:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out

    def to_json(self, include_elapsed: bool = False) -> str:
        return json.dumps(self.to_dict(include_elapsed), indent=2, sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        counts = ", ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        line = f"{self.name}: {status}; {self.instances_checked} instances in {self.elapsed:.2f}s"
        return f"{line}; {counts}" if counts else line


# -- brute-force scans --------------------------------------------------------

_elements: list[GaussianInt] = []
_element_norms: list[int] = []
_elements_bound = -1
_roots: dict[GaussianInt, GaussianInt] = {}


def _ensure_box(bound: int) -> None:
    """Grow the cached list of Gaussian integers with norm <= bound."""
    global _elements, _element_norms, _elements_bound
    if bound <= _elements_bound:
        return
    r = isqrt(bound)
    pts = [
        GaussianInt(a, b)
        for a in range(-r, r + 1)
        for b in range(-r, r + 1)
        if a * a + b * b <= bound
    ]
    pts.sort(key=lambda z: (z.norm(), z.im, z.re))
    _elements = pts
    _element_norms = [z.norm() for z in pts]
    _elements_bound = bound
    _roots.clear()
    for z in reversed(pts):
        _roots[z * z] = z  # earliest root in scan order wins


def elements_up_to(bound: int) -> list[GaussianInt]:
    """Gaussian integers with norm <= bound, ordered by (norm, im, re)."""
    _ensure_box(bound)
    return _elements[: bisect.bisect_right(_element_norms, bound)]


def _root_within(square: GaussianInt, bound: int) -> Optional[GaussianInt]:
    y = _roots.get(square)
    if y is not None and y.norm() <= bound:
        return y
    return None


def _check_bound(t: GaussianInt, bound: int) -> None:
    if bound < t.norm():
        raise ValueError(f"search bound {bound} is below norm({t}) = {t.norm()}")


def brute_force_binary(t: IntLike, bound: int) -> Optional[tuple[GaussianInt, GaussianInt]]:
    """First ``(x, y)`` in scan order with ``x^2 + i y^2 == t`` and both norms <= bound."""
    t = GaussianInt.coerce(t)
    _check_bound(t, bound)
    minus_i = -I
    for x in elements_up_to(bound):
        y = _root_within(minus_i * (t - x * x), bound)
        if y is not None:
            return x, y
    return None


def brute_force_two_squares(a: int, b: int, bound: int) -> Optional[tuple[GaussianInt, GaussianInt]]:
    """First ``(x, y)`` with ``x^2 + y^2 == a + 2bi`` and both norms <= bound."""
    t = GaussianInt(a, 2 * b)
    _check_bound(t, bound)
    for x in elements_up_to(bound):
        y = _root_within(t - x * x, bound)
        if y is not None:
            return x, y
    return None


_pair_values: dict[int, dict[GaussianInt, tuple[GaussianInt, GaussianInt]]] = {}


def brute_force_quat(t: IntLike, bound: int) -> Optional[QuatRep]:
    """Meet-in-the-middle search over all coordinates with norm <= bound."""
    t = GaussianInt.coerce(t)
    _check_bound(t, bound)
    table = _pair_values.get(bound)
    if table is None:
        box = elements_up_to(bound)
        table = {}
        for x in box:
            for y in box:
                table.setdefault(x * x + I * (y * y), (x, y))
        _pair_values[bound] = table
    for v, (x, y) in table.items():
        other = table.get(t - v)
        if other is not None:
            return QuatRep(x, y, other[0], other[1], t)
    return None


def residue_search(p: IntLike) -> tuple[bool, Optional[tuple[GaussianInt, GaussianInt]]]:
    """Exhaustive search in Z[i]/(p) for a canonical prime ``p``.

    Returns ``(i_is_square, coprime_solution)`` where the second entry is a
    coprime pair with ``p | x^2 + i y^2`` or None.
    """
    p = GaussianInt.coerce(p)
    a, b = p.re, p.im
    n = p.norm()
    if b == 0 and a > 2:
        # inert q: residues are a + bi with 0 <= a, b < q
        q = a
        squares = {}
        for u in range(q):
            for v in range(q):
                squares.setdefault(((u * u - v * v) % q, 2 * u * v % q), (u, v))
        i_square = (0, 1) in squares
        found = None
        for u in range(q):
            for v in range(q):
                if u == 0 and v == 0:
                    continue
                c, d = (u * u - v * v) % q, 2 * u * v % q
                hit = squares.get((d % q, -c % q))  # -i * (c + di)
                if hit is not None:
                    found = GaussianInt(*hit), GaussianInt(u, v)
                    break
            if found:
                break
    else:
        # gcd(a, b) == 1: Z[i]/(p) is Z/n with i acting as j = -a/b
        j = -a * pow(b, -1, n) % n
        if not p.divides(GaussianInt(j, -1)):
            raise ArithmeticError(f"residue map for {p} is wrong")
        squares = {}
        for k in range(n):
            squares.setdefault(k * k % n, k)
        i_square = j in squares
        found = None
        for y in range(1, n):
            x = squares.get(-j * y * y % n)
            if x is not None:
                found = GaussianInt(x), GaussianInt(y)
                break
    if found is None:
        return i_square, None
    x, y = found
    g = gcd(x, y)
    x, y = exact_div(x, g), exact_div(y, g)
    if not p.divides(x * x + I * (y * y)):
        raise ArithmeticError(f"residue search for {p} produced a bad pair")
    return i_square, (x, y)


# -- sharding -----------------------------------------------------------------


def _run_chunk(check: Callable, chunk: Sequence) -> list:
    return [check(item) for item in chunk]


def _run(check: Callable, items: Sequence, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return _run_chunk(check, items)
    n_chunks = min(len(items), workers * 4)
    size = -(-len(items) // n_chunks)
    chunks = [items[k : k + size] for k in range(0, len(items), size)]
    out: list = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_run_chunk, [check] * len(chunks), chunks):
            out.extend(part)
    return out


def _sweep(name: str, bounds: dict, check: Callable, items: Sequence, workers: int) -> SweepReport:
    """Each ``check`` returns ``(failure_or_None, [count tags])``."""
    start = time.perf_counter()
    report = SweepReport(name, bounds)
    for failure, tags in _run(check, items, workers):
        report.instances_checked += 1
        if failure is not None:
            report.failures.append(tuple(str(v) for v in failure))
        for tag in tags:
            report.counts[tag] = report.counts.get(tag, 0) + 1
    report.failures.sort()
    report.elapsed = time.perf_counter() - start
    return report


def _rand_gauss(rng: random.Random, r: int) -> GaussianInt:
    return GaussianInt(rng.randint(-r, r), rng.randint(-r, r))


# -- composition identity -----------------------------------------------------


def _check_composition(item):
    A, B, r1, r2 = item
    X, Y, Z, W = compose_general(CompositionCoefficients(A, B), r1, r2)

    def f(r):
        return A * r[0] ** 2 + B * r[1] ** 2 + A * r[2] ** 2 + B * r[3] ** 2

    lhs = f(r1) * f(r2)
    rhs = X * X + A * B * (Y * Y) + Z * Z + A * B * (W * W)
    if lhs != rhs:
        return (f"A={A} B={B} r1={list(map(str, r1))} r2={list(map(str, r2))}", lhs, rhs), []
    return None, []


def verify_composition_random(
    trials: int,
    component_range: int,
    seed: int = DEFAULT_SEED,
    coeffs: Optional[CompositionCoefficients] = None,
    workers: int = 1,
) -> SweepReport:
    """Exact check of the product identity on seeded random inputs.

    With ``coeffs`` given, A and B are fixed instead of drawn at random.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    items = []
    for _ in range(trials):
        if coeffs is None:
            A, B = _rand_gauss(rng, component_range), _rand_gauss(rng, component_range)
        else:
            A, B = GaussianInt.coerce(coeffs.A), GaussianInt.coerce(coeffs.B)
        r1 = tuple(_rand_gauss(rng, component_range) for _ in range(4))
        r2 = tuple(_rand_gauss(rng, component_range) for _ in range(4))
        items.append((A, B, r1, r2))
    bounds = {"trials": trials, "component_range": component_range, "seed": seed}
    if coeffs is not None:
        bounds["coefficients"] = f"A={coeffs.A} B={coeffs.B}"
    return _sweep("composition", bounds, _check_composition, items, workers)


# -- binary form descent --------------------------------------------------------


def _check_descent(item):
    p, cross_bound = item
    cls = classify(p).value
    try:
        x, y = binary.descend(p)
    except ArithmeticError as exc:
        return (p, "x^2 + iy^2 = p", f"error: {exc}"), [cls]
    if binary.binary_value(x, y) != p:
        return (p, p, binary.binary_value(x, y)), [cls]
    tags = [cls]
    if p.norm() <= cross_bound:
        bound = max(p.norm(), x.norm(), y.norm())
        hit = brute_force_binary(p, bound)
        if hit is None:
            return (p, f"oracle witness within norm {bound}", "none"), tags
        if binary.binary_value(*hit) != p:
            return (p, p, f"oracle {hit[0]}, {hit[1]}"), tags
        tags.append("cross_checked")
    return None, tags


def descent_sweep(norm_bound: int, cross_check_bound: int = 1000, workers: int = 1) -> SweepReport:
    """``descend(p)`` for every class-A/B prime up to ``norm_bound``."""
    items = [
        (p, cross_check_bound)
        for p in primes_up_to(norm_bound)
        if classify(p) is not PrimeClass.C
    ]
    bounds = {"norm_bound": norm_bound, "cross_check_bound": cross_check_bound}
    return _sweep("descent", bounds, _check_descent, items, workers)


# -- solvability of x^2 + i y^2 == 0 (mod p) ---------------------------------------


def _check_lemma1(p):
    cls = classify(p)
    i_square, solution = residue_search(p)
    euler = binary.i_is_quadratic_residue(p)
    expected = cls in (PrimeClass.A, PrimeClass.B)
    tags = [cls.value]
    if (solution is not None) != expected:
        return (p, f"coprime solution exists: {expected}", solution is not None), tags
    if i_square != euler:
        return (p, f"i is a square (exhaustive): {i_square}", f"euler: {euler}"), tags
    if i_square != expected:
        return (p, f"i is a square: {expected}", i_square), tags
    return None, tags


def lemma1_sweep(prime_norm_bound: int, workers: int = 1) -> SweepReport:
    if prime_norm_bound < 2:
        raise ValueError("bound must be >= 2")
    items = primes_up_to(prime_norm_bound)
    return _sweep("lemma1", {"prime_norm_bound": prime_norm_bound}, _check_lemma1, items, workers)


# -- Niven-Mordell ------------------------------------------------------------------


def niven_search_bound(a: int, b: int) -> int:
    return max(1, 4 * (a * a + 4 * b * b))


def _check_niven(item):
    a, b = item
    closed = binary.niven_mordell_representable(a, b)
    found = brute_force_two_squares(a, b, niven_search_bound(a, b))
    tags = ["representable" if closed else "excluded"]
    if closed != (found is not None):
        return (f"({a}, {b})", closed, found), tags
    constructive = binary.two_squares(GaussianInt(a, 2 * b))
    if (constructive is not None) != closed:
        return (f"({a}, {b})", closed, f"divisor search: {constructive}"), tags
    if constructive is not None:
        x, y = constructive
        if x * x + y * y != GaussianInt(a, 2 * b):
            return (f"({a}, {b})", GaussianInt(a, 2 * b), x * x + y * y), tags
    return None, tags


def niven_sweep(bound: int, workers: int = 1) -> SweepReport:
    """Closed-form condition vs exhaustive search for all ``|a|, |b| <= bound``."""
    items = [(a, b) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)]
    return _sweep("niven", {"ab_bound": bound}, _check_niven, items, workers)


# -- class-C primes -------------------------------------------------------------------


def _check_class_c(p):
    try:
        wit = binary.represent_class_C(p)
    except ArithmeticError as exc:
        return (p, "witness", f"exhausted: {exc}"), ["exhausted"]
    if wit.value() != p:
        return (p, p, wit.value()), []
    return None, ["twisted" if wit.twisted else "plain"]


def class_c_sweep(norm_bound: int, workers: int = 1) -> SweepReport:
    items = [p for p in primes_up_to(norm_bound) if classify(p) is PrimeClass.C]
    return _sweep("class_c", {"norm_bound": norm_bound}, _check_class_c, items, workers)


# -- universality ---------------------------------------------------------------------


def _check_universality(t):
    try:
        rep = quaternary.represent(t)
    except (ArithmeticError, ValueError) as exc:
        return (t, "witness", f"error: {exc}"), []
    got = quaternary.evaluate(rep)
    if got != t:
        return (t, t, got), []
    if t.is_zero():
        return None, ["zero"]
    if t.is_unit():
        return None, ["unit"]
    return None, [classify(p).value for p, alpha in factorize(t).factors for _ in range(alpha)]


def gaussian_box(norm_bound: int) -> list[GaussianInt]:
    r = isqrt(norm_bound)
    return [
        GaussianInt(a, b)
        for a in range(-r, r + 1)
        for b in range(-r, r + 1)
        if a * a + b * b <= norm_bound
    ]


def universality_sweep(norm_bound: int, workers: int = 1) -> SweepReport:
    """``represent(t)`` for every ``t`` with ``norm(t) <= norm_bound``."""
    if norm_bound < 1:
        raise ValueError("bound must be >= 1")
    items = gaussian_box(norm_bound)
    return _sweep("universality", {"norm_bound": norm_bound}, _check_universality, items, workers)


# -- valuation ------------------------------------------------------------------------


def _check_nu(item):
    kind = item[0]
    if kind == "pair":
        _, a, b = item
        want = nu(a) + nu(b)
        got = nu(a * b)
        return (None if got == want else (f"nu(({a})*({b}))", want, got)), ["pair"]
    z = item[1]
    want = 0 if kind == "unit" else 1
    got = nu(z)
    return (None if got == want else (f"nu({z})", want, got)), [kind]


def nu_sweep(
    trials: int, norm_bound: int = 10**6, prime_bound: int = 10**4, seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> SweepReport:
    """Additivity on random pairs plus the unit and prime values of the valuation."""
    rng = random.Random(seed)
    r = isqrt(norm_bound)
    items: list = []
    while len(items) < trials:
        a, b = _rand_gauss(rng, r), _rand_gauss(rng, r)
        if 0 < a.norm() <= norm_bound and 0 < b.norm() <= norm_bound:
            items.append(("pair", a, b))
    items += [("unit", u) for u in UNITS]
    items += [("prime", p) for p in primes_up_to(prime_bound)]
    bounds = {"trials": trials, "norm_bound": norm_bound, "prime_bound": prime_bound, "seed": seed}
    return _sweep("nu", bounds, _check_nu, items, workers)


# -- restricted forms ---------------------------------------------------------------

EXPECTED_PRESET_FORMS = {
    "1212": (1, 2, 1, 2),
    "1218": (1, 2, 1, 8),
    "1242": (1, 2, 4, 2),
    "1248": (1, 2, 4, 8),
}


def _check_ramanujan(item):
    name, bound = item
    form = ramanujan.restrict(ramanujan.PRESETS[name])
    if form.coeffs != EXPECTED_PRESET_FORMS[name]:
        return (name, list(EXPECTED_PRESET_FORMS[name]), str(form)), []
    miss = ramanujan.represents_all_up_to(form, bound)
    if miss is not None:
        return (name, f"all of 1..{bound}", f"misses {miss}"), []
    return None, [str(form)]


def ramanujan_sweep(bound: int, workers: int = 1) -> SweepReport:
    items = [(name, bound) for name in EXPECTED_PRESET_FORMS]
    return _sweep("ramanujan", {"bound": bound}, _check_ramanujan, items, workers)


def oracle_binary_absent_for_class_c(norm_bound: int) -> list[GaussianInt]:
    """Class-C primes up to ``norm_bound`` for which the oracle (wrongly) finds x^2 + i y^2."""
    return [
        p
        for p in primes_up_to(norm_bound)
        if classify(p) is PrimeClass.C and brute_force_binary(p, p.norm()) is not None
    ]


"""Witnesses for the universal form x^2 + i*y^2 + z^2 + i*w^2 over Z[i].

Each canonical prime gets a witness from :mod:`gaussforms.binary`; products
are handled by a bilinear composition identity and the leading unit is
absorbed by rotating coordinates, so every Gaussian integer is reached.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .binary import absorb_unit_binary, descend, represent_class_C
from .gaussian import I, ONE, ZERO, GaussianInt, IntLike
from .primes import PrimeClass, classify, factorize

Quad = tuple[GaussianInt, GaussianInt, GaussianInt, GaussianInt]


def form_value(x: IntLike, y: IntLike, z: IntLike, w: IntLike) -> GaussianInt:
    x, y, z, w = (GaussianInt.coerce(v) for v in (x, y, z, w))
    return x * x + I * (y * y) + z * z + I * (w * w)


@dataclass(frozen=True)
class QuatRep:
    """``x**2 + i*y**2 + z**2 + i*w**2 == target``, checked on construction."""

    x: GaussianInt
    y: GaussianInt
    z: GaussianInt
    w: GaussianInt
    target: GaussianInt

    def __post_init__(self):
        for name in ("x", "y", "z", "w", "target"):
            object.__setattr__(self, name, GaussianInt.coerce(getattr(self, name)))
        if form_value(self.x, self.y, self.z, self.w) != self.target:
            raise ValueError(f"witness {self.coords()} does not evaluate to {self.target}")

    def coords(self) -> Quad:
        return (self.x, self.y, self.z, self.w)

    def __str__(self) -> str:
        x, y, z, w = self.coords()
        return f"{self.target} = ({x})^2 + i({y})^2 + ({z})^2 + i({w})^2"

    def to_dict(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("x", "y", "z", "w", "target")}


@dataclass(frozen=True)
class CompositionCoefficients:
    A: GaussianInt = ONE
    B: GaussianInt = I


def compose_general(
    coeffs: CompositionCoefficients, r1: Sequence[IntLike], r2: Sequence[IntLike]
) -> Quad:
    """``(X, Y, Z, W)`` with

    ``(A x1^2 + B y1^2 + A z1^2 + B w1^2)(A x2^2 + B y2^2 + A z2^2 + B w2^2)
    == X^2 + AB Y^2 + Z^2 + AB W^2``.
    """
    A, B = GaussianInt.coerce(coeffs.A), GaussianInt.coerce(coeffs.B)
    x1, y1, z1, w1 = (GaussianInt.coerce(v) for v in r1)
    x2, y2, z2, w2 = (GaussianInt.coerce(v) for v in r2)
    X = A * x1 * x2 + B * y1 * y2 + A * z1 * z2 + B * w1 * w2
    Y = x1 * y2 - y1 * x2 - z1 * w2 + w1 * z2
    Z = A * x1 * z2 + B * y1 * w2 - A * z1 * x2 - B * w1 * y2
    W = x1 * w2 - y1 * z2 + z1 * y2 - w1 * x2
    return X, Y, Z, W


_GAUSSIAN = CompositionCoefficients(ONE, I)
IDENTITY = QuatRep(ONE, ZERO, ZERO, ZERO, ONE)


def compose(r1: QuatRep, r2: QuatRep) -> QuatRep:
    """Witness for ``r1.target * r2.target``."""
    for r in (r1, r2):
        if form_value(*r.coords()) != r.target:
            raise ValueError(f"invalid witness {r}")
    return QuatRep(*compose_general(_GAUSSIAN, r1.coords(), r2.coords()), r1.target * r2.target)


def absorb_unit_quat(r: QuatRep, s: int) -> QuatRep:
    """Witness for ``i**s * r.target``."""
    x, y = absorb_unit_binary(r.x, r.y, s)
    z, w = absorb_unit_binary(r.z, r.w, s)
    target = r.target
    for _ in range(s % 4):
        target = I * target
    return QuatRep(x, y, z, w, target)


def represent_prime(p: IntLike) -> QuatRep:
    p = GaussianInt.coerce(p)
    cls = classify(p)
    if cls is PrimeClass.C:
        wit = represent_class_C(p)
        if wit.twisted:
            return QuatRep(ZERO, wit.x, ZERO, wit.y, p)
        return QuatRep(wit.x, ZERO, wit.y, ZERO, p)
    x, y = descend(p)
    return QuatRep(x, y, ZERO, ZERO, p)


def represent(t: IntLike) -> QuatRep:
    """A witness ``(x, y, z, w)`` for any Gaussian integer ``t``.

    Prime witnesses are folded left in the primes' well-order, each repeated
    by its multiplicity, then the unit ``i**s`` of ``t`` is absorbed.
    """
    t = GaussianInt.coerce(t)
    if t.is_zero():
        return QuatRep(ZERO, ZERO, ZERO, ZERO, ZERO)
    f = factorize(t)
    rep = IDENTITY
    for p, alpha in f.factors:
        prime_rep = represent_prime(p)
        for _ in range(alpha):
            rep = compose(rep, prime_rep)
    rep = absorb_unit_quat(rep, f.s)
    if rep.target != t or form_value(*rep.coords()) != t:
        raise ArithmeticError(f"representation pipeline failed for {t}")
    return rep


def evaluate(r: Union[QuatRep, Sequence[IntLike]]) -> GaussianInt:
    if isinstance(r, QuatRep):
        return form_value(*r.coords())
    return form_value(*r)

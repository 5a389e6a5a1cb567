"""Restricting the Gaussian form to lattice lines gives integer diagonal forms.

Pinning each variable to ``m*t`` with ``t`` a rational integer turns
``x^2 + i y^2 + z^2 + i w^2`` into ``c1 a^2 + c2 b^2 + c3 c^2 + c4 d^2``,
where the x/z slots contribute ``m^2`` and the y/w slots ``i*m^2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import isqrt
from typing import Optional

from .gaussian import I, ONE, GaussianInt, parse_gaussian, render_gaussian

SLOTS = ("x", "y", "z", "w")
_I_WEIGHTED = {"y", "w"}


@dataclass(frozen=True)
class DiagonalFormZ:
    coeffs: tuple[int, int, int, int]

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def value(self, a: int, b: int, c: int, d: int) -> int:
        c1, c2, c3, c4 = self.coeffs
        return c1 * a * a + c2 * b * b + c3 * c * c + c4 * d * d


@dataclass(frozen=True)
class RestrictionSpec:
    """Per-slot multipliers: slot ``v`` ranges over ``multiplier * t``, ``t`` in Z."""

    x: GaussianInt = ONE
    y: GaussianInt = ONE
    z: GaussianInt = ONE
    w: GaussianInt = ONE

    def multipliers(self) -> dict[str, GaussianInt]:
        return {s: GaussianInt.coerce(getattr(self, s)) for s in SLOTS}

    def __str__(self) -> str:
        return ", ".join(f"{s}={_render_multiplier(m)}" for s, m in self.multipliers().items())


def _render_multiplier(m: GaussianInt) -> str:
    if m == 1:
        return "t"
    if m == -1:
        return "-t"
    if m.im == 0:
        return f"{m.re}t"
    return f"({render_gaussian(m)})t"


_SLOT_TERM = re.compile(
    r"\s*(?P<slot>[xyzw])\s*=\s*(?P<sign>-)?(?P<scale>\d+)?(?:\((?P<gauss>[^()]*)\))?t\s*$"
)


def parse_restriction(text: str) -> RestrictionSpec:
    """Parse ``x=t, y=(1-i)t, z=t, w=2(1-i)t``; omitted slots default to ``t``."""
    found: dict[str, GaussianInt] = {}
    for part in text.split(","):
        m = _SLOT_TERM.match(part)
        if not m:
            raise ValueError(f"cannot parse restriction term {part.strip()!r}")
        slot = m["slot"]
        if slot in found:
            raise ValueError(f"slot {slot} given twice")
        mult = GaussianInt(int(m["scale"] or 1))
        if m["gauss"] is not None:
            mult = mult * parse_gaussian(m["gauss"])
        if m["sign"]:
            mult = -mult
        found[slot] = mult
    return RestrictionSpec(**found)


def restrict(spec: RestrictionSpec) -> DiagonalFormZ:
    coeffs = []
    for slot, m in spec.multipliers().items():
        c = m * m
        if slot in _I_WEIGHTED:
            c = I * c
        if c.im != 0 or c.re <= 0:
            raise ValueError(f"slot {slot}={_render_multiplier(m)} gives coefficient {c}, "
                             "not a positive integer")
        coeffs.append(c.re)
    return DiagonalFormZ(tuple(coeffs))


_ONE_MINUS_I = GaussianInt(1, -1)

PRESETS: dict[str, RestrictionSpec] = {
    "1212": RestrictionSpec(y=_ONE_MINUS_I, w=_ONE_MINUS_I),
    "1218": RestrictionSpec(y=_ONE_MINUS_I, w=2 * _ONE_MINUS_I),
    "1242": RestrictionSpec(y=_ONE_MINUS_I, z=GaussianInt(2), w=_ONE_MINUS_I),
    "1248": RestrictionSpec(y=_ONE_MINUS_I, z=GaussianInt(2), w=2 * _ONE_MINUS_I),
}


def resolve(text: str) -> RestrictionSpec:
    """A preset name (``1212``, ``[1,2,1,8]``, ...) or a restriction spec string."""
    key = re.sub(r"[\[\],\s]", "", text)
    if key in PRESETS:
        return PRESETS[key]
    return parse_restriction(text)


def parse_form(text: str) -> DiagonalFormZ:
    """``[c1,c2,c3,c4]`` with positive integer entries."""
    m = re.fullmatch(r"\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\s*", text)
    if not m or any(int(c) <= 0 for c in m.groups()):
        raise ValueError(f"not a positive diagonal form: {text!r}")
    return DiagonalFormZ(tuple(int(c) for c in m.groups()))


def _binary_values(c1: int, c2: int, bound: int) -> set[int]:
    """Every value ``c1 a^2 + c2 b^2 <= bound`` with ``a, b >= 0``."""
    values = set()
    for a in range(isqrt(bound // c1) + 1):
        base = c1 * a * a
        for b in range(isqrt((bound - base) // c2) + 1):
            values.add(base + c2 * b * b)
    return values


def represents_all_up_to(form: DiagonalFormZ, bound: int) -> Optional[int]:
    """First ``n`` in ``1..bound`` the form misses, or None if it hits them all."""
    if bound < 1:
        raise ValueError("bound must be positive")
    c1, c2, c3, c4 = form.coeffs
    second = 0
    for v in _binary_values(c3, c4, bound):
        second |= 1 << v
    reach = 0
    for v in _binary_values(c1, c2, bound):
        reach |= second << v
    full = (1 << (bound + 1)) - 1
    missing = ~reach & full & ~1
    if not missing:
        return None
    return (missing & -missing).bit_length() - 1

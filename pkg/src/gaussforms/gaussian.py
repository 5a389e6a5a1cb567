"""Exact arithmetic in the Gaussian integers Z[i].

Everything here works on arbitrary-precision ``int`` components; there is
no floating point anywhere, including the sector test used to pick the
canonical associate of a number.
"""

from __future__ import annotations

import re
from typing import Union

IntLike = Union[int, "GaussianInt"]


class GaussianInt:
    """An element ``re + im*i`` of Z[i]. Immutable and hashable."""

    __slots__ = ("re", "im")

    re: int
    im: int

    def __init__(self, re: int = 0, im: int = 0) -> None:
        object.__setattr__(self, "re", int(re))
        object.__setattr__(self, "im", int(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianInt is immutable")

    @classmethod
    def coerce(cls, value: IntLike) -> GaussianInt:
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        if isinstance(value, tuple) and len(value) == 2:
            return cls(value[0], value[1])
        raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re + other.re, self.im + other.im)
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re - other.re, self.im - other.im)
        if isinstance(other, int):
            return GaussianInt(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GaussianInt(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, GaussianInt):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianInt(a * c - b * d, a * d + b * c)
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            return NotImplemented
        result = ONE
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.re * self.re + self.im * self.im == 1

    def divides(self, other: IntLike) -> bool:
        """True iff ``self | other`` in Z[i]."""
        other = GaussianInt.coerce(other)
        if self.is_zero():
            return other.is_zero()
        n = self.norm()
        num = other * self.conjugate()
        return num.re % n == 0 and num.im % n == 0

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __iter__(self):
        yield self.re
        yield self.im

    def __reduce__(self):
        return (GaussianInt, (self.re, self.im))

    # -- text -------------------------------------------------------------

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self) -> str:
        return render_gaussian(self)

    def to_dict(self) -> dict:
        return {"re": self.re, "im": self.im}


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, I, GaussianInt(-1, 0), GaussianInt(0, -1))


def unit(s: int) -> GaussianInt:
    """Return i**s; the exponent is taken mod 4."""
    return UNITS[s % 4]


def norm(z: IntLike) -> int:
    return GaussianInt.coerce(z).norm()


def in_sector(z: GaussianInt) -> bool:
    """Exact test for -pi/4 < Arg(z) <= pi/4 (z != 0)."""
    return z.re > 0 and -z.re < z.im <= z.re


def canonicalize(z: IntLike) -> tuple[int, GaussianInt]:
    """Split ``z`` as ``i**s * z'`` with ``z'`` in the canonical sector.

    Returns ``(s, z')`` with ``s`` in {0, 1, 2, 3}.
    """
    z = GaussianInt.coerce(z)
    if z.is_zero():
        raise ValueError("0 has no canonical associate")
    a, b = z.re, z.im
    # z' = i**(-s) * z for s = 0..3
    for s, (c, d) in enumerate(((a, b), (b, -a), (-a, -b), (-b, a))):
        if c > 0 and -c < d <= c:
            return s, GaussianInt(c, d)
    raise AssertionError(f"no sector associate for {z!r}")  # pragma: no cover


def _round_half_down(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties going to the floor."""
    return -((den - 2 * num) // (2 * den))


def divmod_centered(a: IntLike, b: IntLike) -> tuple[GaussianInt, GaussianInt]:
    """Euclidean division with the quotient rounded to the nearest lattice point.

    ``a == q*b + r`` and ``norm(r) <= norm(b) / 2``.
    """
    a = GaussianInt.coerce(a)
    b = GaussianInt.coerce(b)
    n = b.norm()
    if n == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    num = a * b.conjugate()
    q = GaussianInt(_round_half_down(num.re, n), _round_half_down(num.im, n))
    return q, a - q * b


def mod(a: IntLike, m: IntLike) -> GaussianInt:
    """Centered residue of ``a`` modulo ``m``; a canonical class representative."""
    return divmod_centered(a, m)[1]


def congruent(a: IntLike, b: IntLike, m: IntLike) -> bool:
    return GaussianInt.coerce(m).divides(GaussianInt.coerce(a) - GaussianInt.coerce(b))


def exact_div(a: IntLike, b: IntLike) -> GaussianInt:
    """Return ``a / b``, raising ``ValueError`` unless the division is exact."""
    q, r = divmod_centered(a, b)
    if not r.is_zero():
        raise ValueError(f"{b} does not divide {a}")
    return q


def gcd(a: IntLike, b: IntLike) -> GaussianInt:
    """Greatest common divisor, normalized into the canonical sector."""
    a = GaussianInt.coerce(a)
    b = GaussianInt.coerce(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, divmod_centered(a, b)[1]
    return canonicalize(a)[1]


def mod_pow(base: IntLike, exp: int, m: IntLike) -> GaussianInt:
    """``base**exp`` reduced modulo ``m`` by square-and-multiply."""
    if exp < 0:
        raise ValueError("negative exponent")
    m = GaussianInt.coerce(m)
    if m.is_zero():
        raise ZeroDivisionError("modulus must be nonzero")
    base = mod(base, m)
    result = mod(ONE, m)
    while exp:
        if exp & 1:
            result = mod(result * base, m)
        base = mod(base * base, m)
        exp >>= 1
    return result


# -- text format ------------------------------------------------------------


def render_gaussian(z: IntLike) -> str:
    """Render as ``a``, ``bi``, ``a+bi`` or ``a-bi`` (unit coefficients drop the 1)."""
    z = GaussianInt.coerce(z)
    a, b = z.re, z.im
    if b == 0:
        return str(a)
    if b == 1:
        imag = "i"
    elif b == -1:
        imag = "-i"
    else:
        imag = f"{b}i"
    if a == 0:
        return imag
    if b > 0:
        return f"{a}+{imag}"
    return f"{a}{imag}"


class GaussianParseError(ValueError):
    """Malformed Gaussian-integer literal; ``position`` indexes the bad character."""

    def __init__(self, text: str, position: int, reason: str) -> None:
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position} in {text!r}")

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.position}^ {self.reason}"


_DIGITS = re.compile(r"\d+")


def parse_gaussian(text: str) -> GaussianInt:
    """Parse ``a``, ``bi``, ``a+bi`` or ``a-bi`` with optional leading sign.

    A bare ``i`` stands for ``1i``. No whitespace is accepted.
    """
    pos = 0
    n = len(text)

    def term(pos: int, need_sign: bool) -> tuple[int, bool, int]:
        sign = 1
        if pos < n and text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
        elif need_sign:
            raise GaussianParseError(text, pos, "expected '+' or '-'")
        m = _DIGITS.match(text, pos)
        digits = m.group() if m else ""
        pos += len(digits)
        if pos < n and text[pos] == "i":
            return sign * int(digits or "1"), True, pos + 1
        if not digits:
            raise GaussianParseError(text, pos, "expected digit or 'i'")
        return sign * int(digits), False, pos

    if n == 0:
        raise GaussianParseError(text, 0, "empty literal")
    value, imaginary, pos = term(pos, need_sign=False)
    if imaginary:
        if pos != n:
            raise GaussianParseError(text, pos, "unexpected trailing input")
        return GaussianInt(0, value)
    if pos == n:
        return GaussianInt(value, 0)
    imag, imaginary, end = term(pos, need_sign=True)
    if not imaginary:
        raise GaussianParseError(text, end, "expected 'i'")
    if end != n:
        raise GaussianParseError(text, end, "unexpected trailing input")
    return GaussianInt(value, imag)

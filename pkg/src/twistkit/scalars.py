"""Exact arithmetic in the Gaussian rationals Q(i).

A value is stored as ``(a + b*i) / d`` with integers ``a, b, d``, ``d > 0`` and
``gcd(a, b, d) == 1``.  This keeps the hot path (multiplication inside tensor
products) on plain Python ints instead of pairs of ``Fraction`` objects.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = [
    "GaussianRational",
    "GaussianParseError",
    "ZERO",
    "ONE",
    "I",
    "gr",
    "gr_arith",
    "gr_parse",
    "gr_format",
]


class GaussianParseError(ValueError):
    """Malformed Gaussian-rational text; ``offset`` is the byte offset of the fault."""

    def __init__(self, message: str, text: str, offset: int):
        self.text = text
        self.offset = len(text[:offset].encode("utf-8"))
        offset = self.offset
        super().__init__(f"{message} at offset {offset} in {text!r}")


class GaussianRational:
    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._set(a, b, d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        obj = object.__new__(cls)
        if d < 0:
            a, b, d = -a, -b, -d
        obj._set(a, b, d)
        return obj

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, int):
            return cls._raw(x, 0, 1)
        if isinstance(x, Rational):
            return cls(x)
        if isinstance(x, str):
            return gr_parse(x)
        if isinstance(x, complex):
            raise TypeError("floating-point complex values are not exact")
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")

    # -- accessors ---------------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """|x|^2 as an exact rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return GaussianRational._raw(self._a + other._a, self._b + other._b, d1)
        return GaussianRational._raw(
            self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, int):
                return GaussianRational._raw(self._a * other, self._b * other, self._d)
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        if b1 == 0 and b2 == 0:
            return GaussianRational._raw(a1 * a2, 0, self._d * other._d)
        return GaussianRational._raw(
            a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * other._d
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        # d / (a + bi) = d (a - bi) / (a^2 + b^2)
        return GaussianRational._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Rational)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self._b == 0:
                self._hash = hash(Fraction(self._a, self._d))
            else:
                self._hash = hash((self._a, self._b, self._d))
        return self._hash

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __repr__(self):
        return f"GaussianRational({gr_format(self)!r})"

    def __str__(self):
        return gr_format(self)


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)


def gr(x) -> GaussianRational:
    """Shorthand coercion: ints, Fractions and grammar strings."""
    return GaussianRational.coerce(x)


def gr_arith(a, b, op: str) -> GaussianRational:
    a = gr(a)
    b = gr(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def gr_format(x: GaussianRational) -> str:
    """Canonical text: ``a/b``, ``a/b+c/di`` or ``c/di``; unit denominators dropped."""
    re_, im_ = x.re, x.im
    if im_ == 0:
        return _format_rational(re_)
    if abs(im_) == 1:
        imag = "i" if im_ > 0 else "-i"
    else:
        imag = _format_rational(im_) + "i"
    if re_ == 0:
        return imag
    if not imag.startswith("-"):
        imag = "+" + imag
    return _format_rational(re_) + imag


_NUM = re.compile(r"(\d+)(?:/(\d+))?")


def gr_parse(text: str) -> GaussianRational:
    """Parse sums of signed rational terms, each optionally followed by ``i``.

    Examples: ``"2i"``, ``"-1+3/2i"``, ``"1/2"``, ``"-i"``.
    """
    pos = 0
    n = len(text)
    total = ZERO
    nterms = 0

    def skip_ws(p):
        while p < n and text[p] in " \t":
            p += 1
        return p

    pos = skip_ws(pos)
    if pos == n:
        raise GaussianParseError("empty input", text, pos)
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif nterms:
            raise GaussianParseError("expected '+' or '-'", text, pos)
        m = _NUM.match(text, pos)
        value = None
        if m:
            num = int(m.group(1))
            if m.group(2) is not None:
                den = int(m.group(2))
                if den == 0:
                    raise GaussianParseError("zero denominator", text, m.start(2))
            else:
                den = 1
            value = Fraction(num, den)
            pos = m.end()
        if pos < n and text[pos] == "i":
            total = total + GaussianRational(0, sign * (value if value is not None else 1))
            pos += 1
        elif value is not None:
            total = total + GaussianRational(sign * value)
        else:
            raise GaussianParseError("expected a number or 'i'", text, pos)
        nterms += 1
        pos = skip_ws(pos)
    return total

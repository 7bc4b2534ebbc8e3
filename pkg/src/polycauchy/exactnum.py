"""Exact rational scalars and dense univariate polynomials over them.

Scalars are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator. On top of that this module adds a
strict ``"p/q"`` interchange format and a small immutable polynomial type.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

__all__ = [
    "Rational",
    "ExactArithmeticError",
    "as_rational",
    "parse_rational",
    "format_rational",
    "rational_arith",
    "Polynomial",
    "poly_mul",
    "poly_eval",
    "roots_to_poly",
]

_RATIONAL_RE = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")


class ExactArithmeticError(ArithmeticError):
    """Raised for undefined exact operations (division by zero, bad input)."""


def parse_rational(text: str) -> Fraction:
    """Parse the strict interchange form ``p``, ``-p``, ``p/q`` or ``-p/q``.

    Unlike ``Fraction(str)`` this rejects decimals, exponents, whitespace and
    an explicit ``+``, so that every accepted string maps back to itself after
    reduction when it was already canonical.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational: {text!r}")
    sign, num, den = m.groups()
    d = int(den) if den is not None else 1
    if d == 0:
        raise ExactArithmeticError(f"zero denominator in {text!r}")
    value = Fraction(int(num), d)
    return -value if sign else value


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "*": operator.mul,
    "/": operator.truediv,
}


def rational_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    a, b = as_rational(a), as_rational(b)
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    if op == "/" and b == 0:
        raise ExactArithmeticError(f"division by zero: {format_rational(a)} / 0")
    return fn(a, b)


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies ``x**i``.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        self._coeffs = _trim([as_rational(c) for c in coeffs])

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: RationalLike = 1) -> "Polynomial":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [c])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("negative exponent")
        return self._coeffs[i] if i < len(self._coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            mag = format_rational(abs(c))
            if i == 0:
                term = mag
            else:
                var = "z" if i == 1 else f"z^{i}"
                term = var if mag == "1" else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    return p(x)


def roots_to_poly(roots: Sequence[RationalLike]) -> Polynomial:
    """Expand ``(t - r0)(t - r1)...`` into a monic polynomial; ``[]`` gives 1."""
    coeffs = [Fraction(1)]
    for r in roots:
        r = as_rational(r)
        # multiply in place by (t - r); new[i] = old[i-1] - r*old[i]
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        coeffs = nxt
    return Polynomial(coeffs)

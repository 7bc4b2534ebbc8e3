"""q-integers and exact Jackson q-integrals of polynomials.

``q`` is either a positive rational other than 1, or the marker
:data:`LIMIT_ONE` standing for the classical limit ``q -> 1``. For ``q > 1``
the Jackson series diverges; there the monomial rule
``int_0^u t^m d_q t = u^(m+1) / [m+1]_q`` is used as a formal definition.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .exactnum import Polynomial, RationalLike, as_rational

__all__ = [
    "LIMIT_ONE",
    "QParameter",
    "as_q",
    "q_regime",
    "q_integer",
    "jackson_integral_monomial",
    "jackson_integral_poly",
]


class _LimitOne:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "LIMIT_ONE"

    def __reduce__(self):
        return (_LimitOne, ())


LIMIT_ONE = _LimitOne()
QParameter = Union[Fraction, _LimitOne]


def as_q(q) -> QParameter:
    if q is LIMIT_ONE:
        return q
    if isinstance(q, str) and q.lower() in ("limit1", "limit_one"):
        return LIMIT_ONE
    value = as_rational(q)
    if value <= 0:
        raise ValueError(f"q must be positive, got {value}")
    if value == 1:
        raise ValueError("q = 1 is not a valid numeric q; use LIMIT_ONE for the classical limit")
    return value


def q_regime(q: QParameter) -> str:
    q = as_q(q)
    if q is LIMIT_ONE:
        return "classical"
    return "series" if q < 1 else "formal-q-antiderivative"


def q_integer(x: int, q: QParameter) -> Fraction:
    """``[x]_q = 1 + q + ... + q^(x-1)``; ``x`` itself in the classical limit."""
    if x < 0:
        raise ValueError(f"q-integer needs x >= 0, got {x}")
    q = as_q(q)
    if q is LIMIT_ONE:
        return Fraction(x)
    # geometric sum, avoids the 1 - q division
    total = Fraction(0)
    power = Fraction(1)
    for _ in range(x):
        total += power
        power *= q
    return total


def jackson_integral_monomial(m: int, upper: RationalLike, q: QParameter) -> Fraction:
    if m < 0:
        raise ValueError("monomial degree must be >= 0")
    upper = as_rational(upper)
    if upper < 0:
        raise ValueError(f"upper limit must be >= 0, got {upper}")
    return upper ** (m + 1) / q_integer(m + 1, q)


def jackson_integral_poly(p: Polynomial, upper: RationalLike, q: QParameter) -> Fraction:
    q = as_q(q)
    return sum(
        (c * jackson_integral_monomial(m, upper, q) for m, c in enumerate(p.coeffs) if c),
        Fraction(0),
    )

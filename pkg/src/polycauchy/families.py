"""Closed-form poly-Cauchy numbers and q-multiparameter poly-Cauchy polynomials.

Every family is a Stirling sum. With ``P = l1*...*lk`` and ``S1(n, m, A)``
the coefficients of ``(t - a0)...(t - a_{n-1})``::

    first(z)  = sum_m S1(n,m,A) sum_i C(m,i) (-z)^i P^(m-i+1) / [m-i+1]_q^k
    second(z) = sum_m (-1)^m S1(n,m,A) (same inner sum)

The classical numbers are the specialisation ``q -> 1``, ``L = (1,...,1)``,
``z = 0``, and ``A = (0, 1, ..., n-1)`` for the plain poly-Cauchy numbers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import List, Optional, Sequence

from .exactnum import Polynomial, RationalLike, as_rational
from .qcalc import LIMIT_ONE, QParameter, as_q, q_integer
from .stirling import (
    ParameterSequence,
    as_parameters,
    multiparam_stirling_row,
    stirling_row,
)


class Kind(enum.Enum):
    FIRST = "first"
    SECOND = "second"

    @classmethod
    def parse(cls, value) -> "Kind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown kind {value!r}; expected 'first' or 'second'") from None


def as_lengths(L: Sequence[RationalLike]) -> tuple:
    lengths = tuple(as_rational(x) for x in L)
    if not lengths:
        raise ValueError("length vector L needs at least one entry")
    for i, x in enumerate(lengths):
        if x <= 0:
            raise ValueError(f"L[{i}] = {x} must be positive")
    return lengths


@dataclass(frozen=True)
class FamilySpec:
    n: int
    k: int
    A: ParameterSequence
    L: tuple
    q: QParameter = LIMIT_ONE
    kind: Kind = Kind.FIRST

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        object.__setattr__(self, "A", as_parameters(self.A))
        object.__setattr__(self, "L", as_lengths(self.L))
        object.__setattr__(self, "q", as_q(self.q))
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        if len(self.A) < self.n:
            raise ValueError(f"A has {len(self.A)} entries, need at least n = {self.n}")
        if len(self.L) != self.k:
            raise ValueError(f"L has {len(self.L)} entries but k = {self.k}")

    @classmethod
    def classical(cls, n: int, k: int, kind=Kind.FIRST, A=None) -> "FamilySpec":
        if A is None:
            A = range(n)
        return cls(n=n, k=k, A=tuple(A), L=(1,) * k, q=LIMIT_ONE, kind=kind)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def multiparam_poly_cauchy_first(n: int, k: int, A: Sequence[RationalLike]) -> Fraction:
    _check_k(k)
    row = multiparam_stirling_row(n, as_parameters(A))
    return sum((s / (m + 1) ** k for m, s in enumerate(row)), Fraction(0))


def multiparam_poly_cauchy_second(n: int, k: int, A: Sequence[RationalLike]) -> Fraction:
    _check_k(k)
    row = multiparam_stirling_row(n, as_parameters(A))
    return sum(((-1) ** m * s / (m + 1) ** k for m, s in enumerate(row)), Fraction(0))


def poly_cauchy_first(n: int, k: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_k(k)
    row = stirling_row(n)
    return sum(
        (Fraction((-1) ** (n - m) * s, (m + 1) ** k) for m, s in enumerate(row) if s),
        Fraction(0),
    )


def poly_cauchy_second(n: int, k: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_k(k)
    row = stirling_row(n)
    total = sum((Fraction(s, (m + 1) ** k) for m, s in enumerate(row) if s), Fraction(0))
    return (-1) ** n * total


def _q_sum(signed_row, k: int, L, q: QParameter) -> Polynomial:
    P = prod(L)
    qint = [None] + [q_integer(j, q) ** k for j in range(1, len(signed_row) + 1)]
    coeffs = [Fraction(0)] * len(signed_row)
    for m, s in enumerate(signed_row):
        if s == 0:
            continue
        for i in range(m + 1):
            j = m - i + 1
            coeffs[i] += s * comb(m, i) * (-1) ** i * P ** j / qint[j]
    return Polynomial(coeffs)


def q_multiparam_poly_first(n: int, k: int, L, A, q) -> Polynomial:
    """First-kind q-multiparameter poly-Cauchy polynomial, as a polynomial in z."""
    spec = FamilySpec(n=n, k=k, A=tuple(A), L=tuple(L), q=q, kind=Kind.FIRST)
    row = multiparam_stirling_row(n, spec.A)
    return _q_sum(row, k, spec.L, spec.q)


def q_multiparam_poly_second(n: int, k: int, L, A, q) -> Polynomial:
    spec = FamilySpec(n=n, k=k, A=tuple(A), L=tuple(L), q=q, kind=Kind.SECOND)
    row = multiparam_stirling_row(n, spec.A)
    return _q_sum([(-1) ** m * s for m, s in enumerate(row)], k, spec.L, spec.q)


def q_multiparam_poly(spec: FamilySpec) -> Polynomial:
    fn = q_multiparam_poly_first if spec.kind is Kind.FIRST else q_multiparam_poly_second
    return fn(spec.n, spec.k, spec.L, spec.A, spec.q)


# parameter-sequence generators

def arithmetic_parameters(rho: RationalLike, length: int) -> ParameterSequence:
    """``a_i = i * rho``; ``rho = 1`` recovers the plain poly-Cauchy numbers."""
    rho = as_rational(rho)
    return tuple(i * rho for i in range(length))


def plateau_parameters(case: str, l: int, head: Sequence[RationalLike], length: int) -> ParameterSequence:
    """``(0, head..., tail, tail, ...)`` with ``len(head) == l``.

    Case ``"I"`` uses tail 1 and needs every head entry >= 2; case ``"II"``
    uses tail 0 and needs every head entry >= 1.
    """
    case = case.upper()
    if case not in ("I", "II"):
        raise ValueError(f"plateau case must be 'I' or 'II', got {case!r}")
    head = as_parameters(head)
    if len(head) != l:
        raise ValueError(f"plateau head has {len(head)} entries, expected l = {l}")
    tail = Fraction(1) if case == "I" else Fraction(0)
    seq = (Fraction(0),) + head
    if length > len(seq):
        seq += (tail,) * (length - len(seq))
    return seq[:length] if length >= 1 else ()


def sequence(
    kind,
    k: int,
    n_max: int,
    A: Optional[Sequence[RationalLike]] = None,
    L: Optional[Sequence[RationalLike]] = None,
    q=None,
    z: Optional[RationalLike] = None,
) -> List[Fraction]:
    """Values for ``n = 0..n_max`` of one family.

    Without ``A``, ``L``, ``q`` and ``z`` these are the poly-Cauchy numbers;
    with only ``A`` the multiparameter numbers; otherwise the q-polynomials
    evaluated at ``z`` (default 0), with ``L`` defaulting to ones and ``q`` to
    the classical limit.
    """
    kind = Kind.parse(kind)
    _check_k(k)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if L is None and q is None and z is None:
        if A is None:
            fn = poly_cauchy_first if kind is Kind.FIRST else poly_cauchy_second
            return [fn(n, k) for n in range(n_max + 1)]
        A = as_parameters(A)
        fn = multiparam_poly_cauchy_first if kind is Kind.FIRST else multiparam_poly_cauchy_second
        return [fn(n, k, A) for n in range(n_max + 1)]
    A = as_parameters(range(n_max) if A is None else A)
    L = (1,) * k if L is None else L
    q = LIMIT_ONE if q is None else q
    z = as_rational(0 if z is None else z)
    return [
        q_multiparam_poly(FamilySpec(n=n, k=k, A=A, L=tuple(L), q=q, kind=kind))(z)
        for n in range(n_max + 1)
    ]

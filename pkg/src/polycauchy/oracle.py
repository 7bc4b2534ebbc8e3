"""Brute-force evaluation of the defining k-fold Jackson integrals.

The integrand ``prod_i (x1...xk - a_i - z)`` (first kind) or
``prod_i (-x1...xk - a_i + z)`` (second kind) is multiplied out as a sparse
polynomial in ``x1..xk`` with coefficients in ``Q[z]`` and then integrated one
variable at a time. Nothing here goes through Stirling numbers or binomial
sums, so agreement with :mod:`polycauchy.families` is a real cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from .exactnum import Polynomial, RationalLike, as_rational
from .families import FamilySpec, Kind
from .qcalc import jackson_integral_monomial

Exponents = Tuple[int, ...]


class OracleBudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 8
    max_k: int = 3

    def check(self, spec: FamilySpec) -> None:
        if spec.n > self.max_n or spec.k > self.max_k:
            raise OracleBudgetExceeded(
                f"oracle budget is n <= {self.max_n}, k <= {self.max_k}; "
                f"refusing n = {spec.n}, k = {spec.k}"
            )


DEFAULT_BUDGET = OracleBudget()


class MultivariatePolynomial:
    """Sparse polynomial in ``nvars`` variables with ``Q[z]`` coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Exponents, Polynomial] = None):
        self.nvars = nvars
        self.terms: Dict[Exponents, Polynomial] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent vector {e} does not have {nvars} entries")
            if not c.is_zero():
                self.terms[tuple(e)] = c

    @classmethod
    def one(cls, nvars: int) -> "MultivariatePolynomial":
        return cls(nvars, {(0,) * nvars: Polynomial([1])})

    def __mul__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        out: Dict[Exponents, Polynomial] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Polynomial()) + c1 * c2
        return MultivariatePolynomial(self.nvars, out)

    def integrate_last(self, upper: Fraction, q) -> "MultivariatePolynomial":
        """Jackson-integrate the last variable over ``[0, upper]``."""
        if self.nvars == 0:
            raise ValueError("no variable left to integrate")
        out: Dict[Exponents, Polynomial] = {}
        for e, c in self.terms.items():
            w = jackson_integral_monomial(e[-1], upper, q)
            rest = e[:-1]
            out[rest] = out.get(rest, Polynomial()) + c * w
        return MultivariatePolynomial(self.nvars - 1, out)

    def constant_term(self) -> Polynomial:
        return self.terms.get((0,) * self.nvars, Polynomial())


def integrand(spec: FamilySpec) -> MultivariatePolynomial:
    k = spec.k
    product_monomial = (1,) * k
    const = (0,) * k
    sign = 1 if spec.kind is Kind.FIRST else -1
    result = MultivariatePolynomial.one(k)
    for a in spec.A[: spec.n]:
        # first: X - a - z; second: -X - a + z
        factor = MultivariatePolynomial(k, {
            product_monomial: Polynomial([sign]),
            const: Polynomial([-a, -sign]),
        })
        result = result * factor
    return result


def oracle_polynomial(spec: FamilySpec, budget: OracleBudget = DEFAULT_BUDGET) -> Polynomial:
    budget.check(spec)
    mp = integrand(spec)
    # innermost integral is over x_k
    for upper in reversed(spec.L):
        mp = mp.integrate_last(upper, spec.q)
    return mp.constant_term()


def oracle_nested_integration(
    spec: FamilySpec, z: RationalLike, budget: OracleBudget = DEFAULT_BUDGET
) -> Fraction:
    return oracle_polynomial(spec, budget)(as_rational(z))

"""Exact poly-Cauchy numbers and machine checks of their log-behaviour."""

__version__ = "0.1.0"

from .exactnum import Polynomial, format_rational, parse_rational, roots_to_poly
from .families import (
    FamilySpec,
    Kind,
    multiparam_poly_cauchy_first,
    multiparam_poly_cauchy_second,
    poly_cauchy_first,
    poly_cauchy_second,
    q_multiparam_poly_first,
    q_multiparam_poly_second,
    sequence,
)
from .qcalc import LIMIT_ONE, q_integer
from .stirling import max_index_Kn, multiparam_stirling1, stirling_row, unsigned_stirling1

"""Stirling numbers of the first kind, classical and multiparameter."""

from __future__ import annotations

import logging
import math
import threading
from fractions import Fraction
from typing import List, Sequence, Tuple

from .exactnum import RationalLike, as_rational, roots_to_poly

log = logging.getLogger(__name__)

ParameterSequence = Tuple[Fraction, ...]

_rows: List[Tuple[int, ...]] = [(1,)]
_rows_lock = threading.Lock()


def as_parameters(entries: Sequence[RationalLike]) -> ParameterSequence:
    return tuple(as_rational(a) for a in entries)


def stirling_row(n: int) -> Tuple[int, ...]:
    """Row ``n`` of the unsigned triangle, ``[n 0], ..., [n n]``.

    Rows are cached; ``[n+1, m] = [n, m-1] + n [n, m]``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < len(_rows):
        return _rows[n]
    with _rows_lock:
        while len(_rows) <= n:
            j = len(_rows) - 1
            prev = _rows[j]
            row = [0] * (j + 2)
            for m in range(j + 2):
                left = prev[m - 1] if m >= 1 else 0
                here = prev[m] if m <= j else 0
                row[m] = left + j * here
            _rows.append(tuple(row))
    return _rows[n]


def unsigned_stirling1(n: int, m: int) -> int:
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if m > n:
        raise ValueError(f"m={m} exceeds n={n}")
    return stirling_row(n)[m]


def multiparam_stirling_row(n: int, A: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
    """Coefficients ``S1(n, m, A)`` for ``m = 0..n``: those of ``(t-a0)...(t-a_{n-1})``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if len(A) < n:
        raise ValueError(f"parameter sequence has {len(A)} entries, need {n}")
    p = roots_to_poly(A[:n])
    return tuple(p[m] for m in range(n + 1))


def multiparam_stirling1(n: int, m: int, A: Sequence[RationalLike]) -> Fraction:
    if m < 0 or m > n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    return multiparam_stirling_row(n, A)[m]


def max_index_Kn(n: int) -> int:
    """Index of the largest ``[n m]``; ties go to the smallest index."""
    if n < 1:
        raise ValueError("K_n is defined for n >= 1")
    row = stirling_row(n)
    best = max(row)
    k = row.index(best)
    if row.count(best) > 1:
        log.warning("K_%d: maximum %d attained %d times; taking smallest index %d",
                    n, best, row.count(best), k)
    if n >= 2:
        log.debug("K_%d = %d, n/ln n = %.4f, ratio %.4f",
                  n, k, n / math.log(n), k / (n / math.log(n)))
    return k


def kn_is_tied(n: int) -> bool:
    row = stirling_row(n)
    return row.count(max(row)) > 1

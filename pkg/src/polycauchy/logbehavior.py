"""Log-convexity, log-concavity and unimodality of exact sequences.

All comparisons are exact. Indices in reports are the sequence's own ``n``
values, i.e. offset by ``start_index``. The theorem drivers work on the
sign-normalised sequences

    sigma_n = (-1)^(n-1) c_n   (n >= 1)
    omega_n = (-1)^n   c^_n    (n >= 0)

which are positive, so that the log-behaviour definitions apply.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exactnum import format_rational
from .families import (
    Kind,
    multiparam_poly_cauchy_first,
    multiparam_poly_cauchy_second,
    poly_cauchy_first,
    poly_cauchy_second,
)
from .stirling import as_parameters, kn_is_tied, max_index_Kn, stirling_row


class HypothesisViolation(ValueError):
    """A parameter sequence does not satisfy a theorem's hypotheses."""


@dataclass(frozen=True)
class Violation:
    prop: str
    j: int
    lhs: Fraction  # z_j^2
    rhs: Fraction  # z_{j-1} z_{j+1}

    def to_dict(self) -> dict:
        return {
            "property": self.prop,
            "j": self.j,
            "square": format_rational(self.lhs),
            "neighbour_product": format_rational(self.rhs),
        }


@dataclass(frozen=True)
class LogBehaviorReport:
    start_index: int
    length: int
    positivity: bool
    first_nonpositive: Optional[int]
    # None when positivity fails: the notions are undefined there
    log_convex: Optional[bool]
    log_concave: Optional[bool]
    unimodal: bool
    modes: Tuple[int, ...]
    strict_single_peak: bool
    vacuous: bool
    violations: Tuple[Violation, ...] = ()

    def first_violation(self, prop: str) -> Optional[Violation]:
        for v in self.violations:
            if v.prop == prop:
                return v
        return None

    @property
    def holds_log_convex(self) -> bool:
        return bool(self.positivity and self.log_convex)

    def to_dict(self) -> dict:
        def verdict(v):
            return "not applicable" if v is None else v

        return {
            "start_index": self.start_index,
            "length": self.length,
            "positivity": self.positivity,
            "first_nonpositive": self.first_nonpositive,
            "log_convex": verdict(self.log_convex),
            "log_concave": verdict(self.log_concave),
            "unimodal": self.unimodal,
            "modes": list(self.modes),
            "strict_single_peak": self.strict_single_peak,
            "vacuous": self.vacuous,
            "violations": [v.to_dict() for v in self.violations],
        }


def _unimodal(seq: Sequence[Fraction]) -> Tuple[bool, Tuple[int, ...], bool]:
    if not seq:
        return True, (), False
    top = max(seq)
    modes = tuple(i for i, v in enumerate(seq) if v == top)
    p = modes[0]
    rises = all(seq[i] <= seq[i + 1] for i in range(p))
    falls = all(seq[i] >= seq[i + 1] for i in range(p, len(seq) - 1))
    ok = rises and falls
    strict = (
        ok
        and len(modes) == 1
        and all(seq[i] < seq[i + 1] for i in range(p))
        and all(seq[i] > seq[i + 1] for i in range(p, len(seq) - 1))
    )
    return ok, modes, strict


def analyze(seq: Sequence[Fraction], start_index: int = 0) -> LogBehaviorReport:
    seq = [Fraction(v) for v in seq]
    first_bad = next((i for i, v in enumerate(seq) if v <= 0), None)
    positive = first_bad is None
    violations: List[Violation] = []
    convex = concave = None
    if positive:
        convex = concave = True
        for j in range(1, len(seq) - 1):
            sq = seq[j] * seq[j]
            nb = seq[j - 1] * seq[j + 1]
            if convex and sq > nb:
                convex = False
                violations.append(Violation("log_convex", start_index + j, sq, nb))
            if concave and sq < nb:
                concave = False
                violations.append(Violation("log_concave", start_index + j, sq, nb))
    uni, modes, strict = _unimodal(seq)
    return LogBehaviorReport(
        start_index=start_index,
        length=len(seq),
        positivity=positive,
        first_nonpositive=None if positive else start_index + first_bad,
        log_convex=convex,
        log_concave=concave,
        unimodal=uni,
        modes=tuple(start_index + m for m in modes),
        strict_single_peak=strict,
        vacuous=len(seq) < 3,
        violations=tuple(violations),
    )


# The three checks share one pass; each caller reads the field it wants.
check_log_convex = analyze
check_log_concave = analyze
check_unimodal = analyze


def recheck(v: Violation, seq: Sequence[Fraction], start_index: int = 0) -> bool:
    """True when the certificate ``v`` reproduces a genuine violation in ``seq``."""
    j = v.j - start_index
    sq = seq[j] * seq[j]
    nb = seq[j - 1] * seq[j + 1]
    if (sq, nb) != (v.lhs, v.rhs):
        return False
    return sq > nb if v.prop == "log_convex" else sq < nb


def sign_normalize(values: Sequence[Fraction], kind, start_index: int) -> List[Fraction]:
    kind = Kind.parse(kind)
    if kind is Kind.FIRST and start_index < 1:
        raise ValueError("first-kind normalisation starts at n >= 1")
    if start_index < 0:
        raise ValueError("start_index must be >= 0")
    shift = 1 if kind is Kind.FIRST else 0
    return [(-1) ** (n - shift) * Fraction(v) for n, v in enumerate(values, start=start_index)]


def stirling_transform(y: Sequence[Fraction]) -> List[Fraction]:
    out = []
    for n in range(len(y)):
        row = stirling_row(n)
        out.append(sum((row[m] * Fraction(y[m]) for m in range(n + 1)), Fraction(0)))
    return out


# theorem drivers

def sigma_sequence(k: int, n_max: int, A=None) -> List[Fraction]:
    """sigma_n for n = 1..n_max."""
    if A is None:
        vals = [poly_cauchy_first(n, k) for n in range(1, n_max + 1)]
    else:
        vals = [multiparam_poly_cauchy_first(n, k, A) for n in range(1, n_max + 1)]
    return sign_normalize(vals, Kind.FIRST, 1)


def omega_sequence(k: int, n_max: int, A=None) -> List[Fraction]:
    """omega_n for n = 0..n_max."""
    if A is None:
        vals = [poly_cauchy_second(n, k) for n in range(n_max + 1)]
    else:
        vals = [multiparam_poly_cauchy_second(n, k, A) for n in range(n_max + 1)]
    return sign_normalize(vals, Kind.SECOND, 0)


def verify_theorem_21(k: int, n_max: int) -> Tuple[LogBehaviorReport, LogBehaviorReport]:
    """Log-convexity of sigma over n = 2..n_max and omega over n = 0..n_max."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    sigma = sigma_sequence(k, n_max)[1:]
    omega = omega_sequence(k, n_max)
    return analyze(sigma, 2), analyze(omega, 0)


@dataclass(frozen=True)
class BoundCheck:
    k: int
    n: int
    lhs: Fraction
    rhs: Fraction
    K_n: int
    tied: bool

    @property
    def strict(self) -> bool:
        return self.lhs < self.rhs

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "K_n": self.K_n,
            "strict": self.strict,
        }


def verify_theorem_22(k: int, n: int) -> BoundCheck:
    """``omega_n < [n K_n] * sum_{m=1}^n 1/(m+1)^k``."""
    if n < 3:
        raise ValueError(f"bound is stated for n >= 3, got n = {n}")
    if k < 1:
        raise ValueError("k must be >= 1")
    lhs = (-1) ** n * poly_cauchy_second(n, k)
    K = max_index_Kn(n)
    rhs = stirling_row(n)[K] * sum((Fraction(1, (m + 1) ** k) for m in range(1, n + 1)), Fraction(0))
    return BoundCheck(k=k, n=n, lhs=lhs, rhs=rhs, K_n=K, tied=kn_is_tied(n))


def check_growth_hypothesis(A: Sequence, n_max: int) -> None:
    """a0 = 0, a_j >= 1 and a_j - a_{j-1} >= 1 for the entries in use."""
    A = as_parameters(A)
    if not A or A[0] != 0:
        raise HypothesisViolation("parameter sequence must start with a0 = 0")
    if len(A) < n_max:
        raise HypothesisViolation(f"need {n_max} parameters, got {len(A)}")
    for j in range(1, min(len(A), n_max + 1)):
        if A[j] < 1:
            raise HypothesisViolation(f"a_{j} = {A[j]} < 1")
        if A[j] - A[j - 1] < 1:
            raise HypothesisViolation(f"a_{j} - a_{j-1} = {A[j] - A[j - 1]} < 1")


def verify_theorem_23(k: int, A: Sequence, n_max: int) -> Tuple[LogBehaviorReport, LogBehaviorReport]:
    if k < 1:
        raise ValueError("k must be >= 1")
    A = as_parameters(A)
    check_growth_hypothesis(A, n_max)
    sigma = sigma_sequence(k, n_max, A)[1:]
    omega = omega_sequence(k, n_max, A)
    return analyze(sigma, 2), analyze(omega, 0)


@dataclass(frozen=True)
class UnimodalCheck:
    case: str
    k: int
    l: int
    report: LogBehaviorReport
    differences: Tuple[Fraction, ...]  # v_{n+1} - v_n, n = 1..n_max-1

    @property
    def unimodal(self) -> bool:
        return self.report.unimodal

    @property
    def modes(self) -> Tuple[int, ...]:
        return self.report.modes

    @property
    def sign_pattern_ok(self) -> bool:
        for n, d in enumerate(self.differences, start=1):
            if n <= self.l and not d > 0:
                return False
            if n > self.l and not d < 0:
                return False
        return True

    @property
    def passed(self) -> bool:
        return self.unimodal and self.modes == (self.l + 1,) and self.sign_pattern_ok

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "k": self.k,
            "l": self.l,
            "unimodal": self.unimodal,
            "modes": list(self.modes),
            "strict_single_peak": self.report.strict_single_peak,
            "sign_pattern_ok": self.sign_pattern_ok,
            # beyond n_max every new factor keeps the same sign
            "tail": "difference integrand sign is fixed for all n > l by the constant tail",
        }


def check_plateau_shape(case: str, l: int, A: Sequence, n_max: int) -> None:
    A = as_parameters(A)
    case = case.upper()
    if case not in ("I", "II"):
        raise ValueError(f"case must be 'I' or 'II', got {case!r}")
    if l < 3:
        raise HypothesisViolation(f"l must be >= 3, got {l}")
    if not A or A[0] != 0:
        raise HypothesisViolation("parameter sequence must start with a0 = 0")
    if len(A) < n_max:
        raise HypothesisViolation(f"need {n_max} parameters, got {len(A)}")
    floor, tail = (2, 1) if case == "I" else (1, 0)
    for j in range(1, len(A)):
        if j <= l and A[j] < floor:
            raise HypothesisViolation(f"case {case}: a_{j} = {A[j]} < {floor}")
        if j > l and A[j] != tail:
            raise HypothesisViolation(f"case {case}: a_{j} = {A[j]} != {tail}")


def verify_theorem_24(case: str, k: int, l: int, A: Sequence, n_max: int) -> UnimodalCheck:
    case = case.upper()
    A = as_parameters(A)
    check_plateau_shape(case, l, A, n_max)
    if n_max < l + 3:
        raise ValueError(f"n_max must be >= l + 3 = {l + 3}")
    if case == "I":
        vals = sigma_sequence(k, n_max, A)
    else:
        vals = omega_sequence(k, n_max, A)[1:]
    diffs = tuple(b - a for a, b in zip(vals, vals[1:]))
    return UnimodalCheck(case=case, k=k, l=l, report=analyze(vals, 1), differences=diffs)


# Stirling transform and log-convexity

def verify_lemma_21_empirical(y: Sequence[Fraction]) -> bool:
    """Whether the Stirling transform of a positive log-convex ``y`` is log-convex."""
    y = [Fraction(v) for v in y]
    pre = analyze(y)
    if not pre.holds_log_convex:
        raise HypothesisViolation("seed sequence must be positive and log-convex")
    return analyze(stirling_transform(y)).holds_log_convex


def random_log_convex(rng: random.Random, length: int, max_den: int = 12) -> List[Fraction]:
    """Positive sequence with nondecreasing consecutive ratios."""
    y0 = Fraction(rng.randint(1, 20), rng.randint(1, max_den))
    ratio = Fraction(rng.randint(1, 20), rng.randint(1, max_den))
    out = [y0]
    for _ in range(length - 1):
        out.append(out[-1] * ratio)
        ratio += Fraction(rng.randint(0, 5), rng.randint(1, max_den))
    return out


def random_log_concave(rng: random.Random, length: int, max_den: int = 12) -> List[Fraction]:
    """Positive sequence with nonincreasing consecutive ratios."""
    out = [Fraction(rng.randint(1, 20), rng.randint(1, max_den))]
    ratios = sorted(
        (Fraction(rng.randint(1, 30), rng.randint(1, max_den)) for _ in range(length - 1)),
        reverse=True,
    )
    for r in ratios:
        out.append(out[-1] * r)
    return out


def lemma_21_trials(trials: int, length: int = 12, seed: int = 0) -> List[Tuple[List[Fraction], bool]]:
    rng = random.Random(seed)
    results = []
    for _ in range(trials):
        y = random_log_convex(rng, length)
        results.append((y, verify_lemma_21_empirical(y)))
    return results


def geometric(first: Fraction, ratio: Fraction, length: int) -> List[Fraction]:
    return [Fraction(first) * Fraction(ratio) ** i for i in range(length)]


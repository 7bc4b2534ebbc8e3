"""Command-line front end.

    python -m polycauchy compute --family first --k 1 --n-max 10
    python -m polycauchy analyze --family second --k 2 --n-max 20
    python -m polycauchy verify t22 --k-range 1-4 --n-max 30
    python -m polycauchy oeis-check --family first --k 1 --part denominator b006233.txt
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .bfile import BFileError, compare, format_bfile, load_manifest, rational_part, read_bfile
from .exactnum import format_rational, parse_rational
from .families import Kind, arithmetic_parameters, as_lengths, plateau_parameters, sequence
from .logbehavior import (
    HypothesisViolation,
    analyze,
    lemma_21_trials,
    sign_normalize,
    stirling_transform,
    verify_theorem_21,
    verify_theorem_22,
    verify_theorem_23,
    verify_theorem_24,
)
from .oracle import OracleBudget, OracleBudgetExceeded, oracle_nested_integration
from .qcalc import LIMIT_ONE, as_q, q_regime

log = logging.getLogger("polycauchy")

SUITES = ("t21", "t22", "t23", "t24", "lemma21", "oracle")


class ConfigError(ValueError):
    def __init__(self, fieldname: str, message: str):
        super().__init__(f"--{fieldname}: {message}")
        self.fieldname = fieldname


def _rationals(text: str, fieldname: str) -> List[Fraction]:
    try:
        return [parse_rational(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ArithmeticError) as exc:
        raise ConfigError(fieldname, str(exc)) from None


def parse_A(text: Optional[str], length: int):
    """Parse ``0,1,3``, ``rho:R`` or ``plateau:CASE,l,h1,...,hl``."""
    if text is None:
        return None
    try:
        if text.startswith("rho:"):
            return arithmetic_parameters(parse_rational(text[4:]), length)
        if text.startswith("plateau:"):
            parts = text[8:].split(",")
            case, l = parts[0], int(parts[1])
            head = [parse_rational(p) for p in parts[2:]]
            return plateau_parameters(case, l, head, max(length, l + 1))
    except (ValueError, IndexError) as exc:
        raise ConfigError("A", f"bad parameter spec {text!r}: {exc}") from None
    return tuple(_rationals(text, "A"))


def parse_range(text: str, fieldname: str) -> List[int]:
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ConfigError(fieldname, f"expected 'a-b' or a comma list, got {text!r}") from None


@dataclass
class RunConfig:
    family: Kind = Kind.FIRST
    k: int = 1
    n_max: int = 10
    A: Optional[tuple] = None
    A_text: Optional[str] = None
    L: Optional[tuple] = None
    q: object = None
    z: Optional[Fraction] = None
    fmt: str = "csv"

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        try:
            family = Kind.parse(args.family)
        except ValueError as exc:
            raise ConfigError("family", str(exc)) from None
        if args.k < 1:
            raise ConfigError("k", f"must be a positive integer, got {args.k}")
        if args.n_max < 0:
            raise ConfigError("n-max", f"must be >= 0, got {args.n_max}")
        A = parse_A(args.A, args.n_max)
        if A is not None and len(A) < args.n_max:
            raise ConfigError("A", f"has {len(A)} entries, need at least n-max = {args.n_max}")
        L = None
        if args.L is not None:
            try:
                L = as_lengths(_rationals(args.L, "L"))
            except ValueError as exc:
                raise ConfigError("L", str(exc)) from None
            if len(L) != args.k:
                raise ConfigError("L", f"has {len(L)} entries but k = {args.k}")
        q = None
        if args.q is not None:
            try:
                q = as_q(args.q)
            except (ValueError, ArithmeticError) as exc:
                raise ConfigError("q", str(exc)) from None
        z = None
        if args.z is not None:
            z = _rationals(args.z, "z")
            if len(z) != 1:
                raise ConfigError("z", "expected a single rational")
            z = z[0]
        return cls(family=family, k=args.k, n_max=args.n_max, A=A, A_text=args.A,
                   L=L, q=q, z=z, fmt=args.format)

    def values(self) -> List[Fraction]:
        return sequence(self.family, self.k, self.n_max, A=self.A, L=self.L, q=self.q, z=self.z)

    def meta(self) -> dict:
        meta = {
            "tool": "polycauchy",
            "version": __version__,
            "family": self.family.value,
            "k": self.k,
            "n_max": self.n_max,
            "A": self.A_text,
            "L": None if self.L is None else [format_rational(x) for x in self.L],
            "q": None if self.q is None else ("limit1" if self.q is LIMIT_ONE else format_rational(self.q)),
            "z": None if self.z is None else format_rational(self.z),
        }
        if self.q is not None:
            meta["q_regime"] = q_regime(self.q)
        return meta


def render_table(rows: Sequence[Tuple[int, Fraction]], fmt: str, meta: dict) -> str:
    if fmt == "json":
        doc = {"meta": meta, "rows": [{"n": n, "value": format_rational(v)} for n, v in rows]}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "value"])
    for n, v in rows:
        w.writerow([n, format_rational(v)])
    return buf.getvalue()


def parse_table(text: str) -> List[Tuple[int, Fraction]]:
    """Inverse of :func:`render_table` for either format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        return [(int(r["n"]), parse_rational(r["value"])) for r in doc["rows"]]
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["n", "value"]:
        raise ValueError(f"unexpected CSV header {header}")
    return [(int(n), parse_rational(v)) for n, v in reader]


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    cfg = RunConfig.from_args(args)
    values = cfg.values()
    if cfg.fmt == "bfile":
        entries = [(n, rational_part(v, args.part, not args.unsigned)) for n, v in enumerate(values)]
        _emit(format_bfile(entries, f"{cfg.family.value} kind, k={cfg.k}, {args.part}s"), args.out)
    else:
        _emit(render_table(list(enumerate(values)), cfg.fmt, cfg.meta()), args.out)
    return 0


def _read_sequence_file(path: str) -> List[Fraction]:
    with open(path) as f:
        text = f.read()
    if text.lstrip().startswith("["):
        return [parse_rational(str(v)) for v in json.loads(text)]
    try:
        return [v for _, v in parse_table(text)]
    except (ValueError, StopIteration):
        pass
    return [parse_rational(t) for t in text.replace(",", " ").split()]


def cmd_analyze(args) -> int:
    if args.input:
        seq = _read_sequence_file(args.input)
        start = args.n_min if args.n_min is not None else 0
        meta = {"tool": "polycauchy", "version": __version__, "input": args.input}
    else:
        cfg = RunConfig.from_args(args)
        values = cfg.values()
        first_n = 1 if cfg.family is Kind.FIRST else 0
        start = args.n_min if args.n_min is not None else first_n
        if start > cfg.n_max:
            raise ConfigError("n-min", f"{start} exceeds n-max = {cfg.n_max}")
        if args.raw:
            seq = values[start:]
        else:
            if start < first_n:
                raise ConfigError("n-min", f"sign normalisation starts at n = {first_n}")
            seq = sign_normalize(values[start:], cfg.family, start)
        meta = cfg.meta()
        meta["normalized"] = not args.raw
    report = analyze(seq, start)
    doc = {"meta": meta, "report": report.to_dict()}
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


# verify suites: each returns a list of instance dicts with a "passed" key

T23_DEFAULTS = {
    "consecutive": lambda n: tuple(range(n + 1)),
    "rho=3/2": lambda n: arithmetic_parameters(Fraction(3, 2), n + 1),
    "rho=2": lambda n: arithmetic_parameters(2, n + 1),
    "gaps-doubling": lambda n: tuple(2 ** j - 1 for j in range(n + 1)),
    "squares": lambda n: tuple(j * j for j in range(n + 1)),
    "gaps-1,3/2": lambda n: tuple(Fraction(j * 5, 4) - (Fraction(1, 4) if j % 2 else 0) for j in range(n + 1)),
}

T24_DEFAULTS = {
    "I": [lambda l: [2] * l, lambda l: [5 - min(j, 3) for j in range(l)], lambda l: [Fraction(7, 3)] * l],
    "II": [lambda l: [1] * l, lambda l: [3 - min(j, 2) for j in range(l)], lambda l: [Fraction(5, 2)] * l],
}


def suite_t21(ks, n_max, args) -> List[dict]:
    out = []
    for k in ks:
        sigma, omega = verify_theorem_21(k, n_max)
        out.append({"k": k, "sigma": sigma.to_dict(), "omega": omega.to_dict(),
                    "passed": sigma.holds_log_convex and omega.holds_log_convex})
    return out


def suite_t22(ks, n_max, args) -> List[dict]:
    out = []
    for k in ks:
        for n in range(3, n_max + 1):
            b = verify_theorem_22(k, n)
            out.append({**b.to_dict(), "passed": b.strict})
    return out


def suite_t23(ks, n_max, args) -> List[dict]:
    if args.A:
        named = {args.A: parse_A(args.A, n_max + 1)}
    else:
        named = {name: gen(n_max) for name, gen in T23_DEFAULTS.items()}
    out = []
    for name, A in named.items():
        for k in ks:
            sigma, omega = verify_theorem_23(k, A, n_max)
            out.append({"A": name, "k": k, "sigma": sigma.to_dict(), "omega": omega.to_dict(),
                        "passed": sigma.holds_log_convex and omega.holds_log_convex})
    return out


def suite_t24(ks, n_max, args) -> List[dict]:
    cases = [args.case] if args.case else ["I", "II"]
    ls = parse_range(args.l, "l") if args.l else [3, 4, 5]
    out = []
    for case in cases:
        for l in ls:
            horizon = max(n_max, l + 3)
            if args.A:
                shapes = [(args.A, parse_A(args.A, horizon))]
            else:
                shapes = [(f"plateau:{case},{l},default{i}", plateau_parameters(case, l, gen(l), horizon))
                          for i, gen in enumerate(T24_DEFAULTS[case])]
            for name, A in shapes:
                for k in ks:
                    r = verify_theorem_24(case, k, l, A, horizon)
                    out.append({**r.to_dict(), "A": name, "passed": r.passed})
    return out


def suite_lemma21(ks, n_max, args) -> List[dict]:
    out = []
    for i, (y, ok) in enumerate(lemma_21_trials(args.trials, args.length, args.seed)):
        out.append({"trial": i, "seed_sequence": [format_rational(v) for v in y], "passed": ok})
    for k in ks:
        y = [Fraction(1, (m + 1) ** k) for m in range(n_max + 1)]
        z = stirling_transform(y)
        omega = [(-1) ** n * v for n, v in enumerate(sequence(Kind.SECOND, k, n_max))]
        out.append({"canonical_k": k, "reproduces_omega": z == omega,
                    "log_convex": analyze(z).holds_log_convex,
                    "passed": z == omega and analyze(z).holds_log_convex})
    return out


def suite_oracle(ks, n_max, args) -> List[dict]:
    import random

    from .families import FamilySpec, q_multiparam_poly

    budget = OracleBudget(max_n=args.oracle_max_n, max_k=args.oracle_max_k)
    if n_max > budget.max_n or max(ks) > budget.max_k:
        raise OracleBudgetExceeded(
            f"oracle budget is n <= {budget.max_n}, k <= {budget.max_k}; "
            f"requested n <= {n_max}, k <= {max(ks)}"
        )
    out = []
    for seed in range(args.seeds):
        rng = random.Random(seed)
        for k in ks:
            for n in range(n_max + 1):
                L = tuple(Fraction(rng.randint(1, 9), rng.randint(1, 5)) for _ in range(k))
                A = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n))
                q = Fraction(rng.randint(1, 8), 9)
                z = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                for kind in Kind:
                    spec = FamilySpec(n=n, k=k, A=A, L=L, q=q, kind=kind)
                    closed = q_multiparam_poly(spec)(z)
                    brute = oracle_nested_integration(spec, z, budget)
                    out.append({"seed": seed, "kind": kind.value, "n": n, "k": k,
                                "closed_form": format_rational(closed),
                                "oracle": format_rational(brute), "passed": closed == brute})
    return out


SUITE_FUNCS = {
    "t21": suite_t21,
    "t22": suite_t22,
    "t23": suite_t23,
    "t24": suite_t24,
    "lemma21": suite_lemma21,
    "oracle": suite_oracle,
}


def cmd_verify(args) -> int:
    ks = parse_range(args.k_range, "k-range")
    if not ks or min(ks) < 1:
        raise ConfigError("k-range", "k values must be positive")
    suites = SUITES if args.suite == "all" else (args.suite,)
    summary = {"meta": {"tool": "polycauchy", "version": __version__}, "suites": {}}
    all_ok = True
    for name in suites:
        n_max = args.n_max
        if n_max is None:
            n_max = 5 if name == "oracle" else (20 if name in ("t23", "t24") else 30)
        suite_ks, note = ks, None
        if name == "oracle" and args.suite == "all":
            suite_ks = [k for k in ks if k <= args.oracle_max_k]
            n_max = min(n_max, args.oracle_max_n)
            if suite_ks != ks:
                note = f"k clipped to the oracle budget k <= {args.oracle_max_k}"
            if not suite_ks:
                summary["suites"][name] = {"passed": True, "count": 0, "instances": [], "note": note}
                continue
        instances = SUITE_FUNCS[name](suite_ks, n_max, args)
        ok = all(i["passed"] for i in instances)
        all_ok &= ok
        summary["suites"][name] = {"passed": ok, "count": len(instances), "instances": instances}
        if note:
            summary["suites"][name]["note"] = note
        log.info("%s: %s (%d instances)", name, "PASS" if ok else "FAIL", len(instances))
    summary["passed"] = all_ok
    _emit(json.dumps(summary, indent=2) + "\n", args.out)
    return 0 if all_ok else 1


def cmd_oeis_check(args) -> int:
    family, k, part, offset, signed = args.family, args.k, args.part, args.offset, not args.unsigned
    if args.anumber:
        entry = load_manifest()["entries"].get(args.anumber)
        if entry is None:
            raise ConfigError("anumber", f"{args.anumber} is not in the bundled manifest")
        if entry["family"] is None:
            raise ConfigError("anumber", f"{args.anumber} has no settings yet; pass them explicitly")
        if not entry["confirmed"]:
            log.warning("manifest settings for %s are unconfirmed", args.anumber)
        family, k, part, offset, signed = (entry["family"], entry["k"], entry["part"],
                                           entry["offset"], entry["signed"])
    if part is None:
        raise ConfigError("part", "required (numerator or denominator)")
    bf = read_bfile(args.bfile)
    n_needed = max((i - offset for i, _ in bf.entries), default=0)
    if n_needed < 0:
        raise ConfigError("offset", f"offset {offset} maps b-file indices below n = 0")
    values = sequence(family, k, n_needed)
    report = compare(bf, values, part, offset, signed)
    doc = {"meta": {"tool": "polycauchy", "version": __version__, "family": Kind.parse(family).value,
                    "k": k, "part": part, "offset": offset, "signed": signed, "bfile": args.bfile},
           **report.to_dict()}
    if report.vacuous:
        log.warning("b-file %s has no entries; match is vacuous", args.bfile)
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0 if report.full_match else 1


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", default="first", help="first or second")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--A", default=None, help="'a0,a1,...', 'rho:R' or 'plateau:CASE,l,h1,...,hl'")
    p.add_argument("--L", default=None, help="comma-separated positive rationals, k of them")
    p.add_argument("--q", default=None, help="positive rational != 1, or 'limit1'")
    p.add_argument("--z", default=None)
    p.add_argument("--out", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polycauchy", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="table of exact values")
    _add_family_flags(p)
    p.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")
    p.add_argument("--part", choices=("numerator", "denominator"), default="denominator",
                   help="for --format bfile")
    p.add_argument("--unsigned", action="store_true", help="strip numerator signs in b-file output")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("analyze", help="log-behaviour report")
    _add_family_flags(p)
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--raw", action="store_true", help="skip sign normalisation")
    p.add_argument("--input", default=None, help="analyze a sequence file instead")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run theorem suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--k-range", default="1-4")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--A", default=None)
    p.add_argument("--case", choices=("I", "II"), default=None)
    p.add_argument("--l", default=None, help="l values for t24, e.g. '3-5'")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--length", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("--oracle-max-n", type=int, default=8)
    p.add_argument("--oracle-max-k", type=int, default=3)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis-check", help="compare against a local b-file")
    p.add_argument("bfile")
    p.add_argument("--family", default="first")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--part", choices=("numerator", "denominator"), default=None)
    p.add_argument("--offset", type=int, default=0, help="b-file index minus n")
    p.add_argument("--unsigned", action="store_true", help="compare numerators by absolute value")
    p.add_argument("--anumber", default=None, help="take settings from the bundled manifest")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_oeis_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        parser.error(str(exc))
    except (OracleBudgetExceeded, HypothesisViolation, BFileError, OSError, ValueError, ArithmeticError) as exc:
        print(f"polycauchy {args.command}: error: {exc}", file=sys.stderr)
        return 2

"""OEIS b-file reading, writing and comparison against computed values."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple


class BFileError(ValueError):
    pass


@dataclass(frozen=True)
class BFile:
    entries: Tuple[Tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.entries)


def parse_bfile(text: str) -> BFile:
    entries: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer field in {raw!r}") from None
        if entries and index <= entries[-1][0]:
            raise BFileError(f"line {lineno}: index {index} does not increase")
        entries.append((index, value))
    return BFile(tuple(entries))


def read_bfile(path) -> BFile:
    return parse_bfile(Path(path).read_text())


def format_bfile(entries: Iterable[Tuple[int, int]], comment: Optional[str] = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines += [f"{i} {v}" for i, v in entries]
    return "\n".join(lines) + "\n"


def rational_part(x: Fraction, part: str, signed: bool = True) -> int:
    """Numerator (carrying the sign unless ``signed`` is false) or denominator."""
    if part == "numerator":
        return x.numerator if signed else abs(x.numerator)
    if part == "denominator":
        return x.denominator
    raise ValueError(f"part must be 'numerator' or 'denominator', got {part!r}")


@dataclass
class MatchReport:
    checked: List[dict] = field(default_factory=list)

    @property
    def mismatches(self) -> List[dict]:
        return [c for c in self.checked if not c["match"]]

    @property
    def vacuous(self) -> bool:
        return not self.checked

    @property
    def full_match(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "checked": len(self.checked),
            "matched": len(self.checked) - len(self.mismatches),
            "mismatched": len(self.mismatches),
            "full_match": self.full_match,
            "vacuous": self.vacuous,
            "entries": self.checked,
        }


def compare(bfile: BFile, values: Sequence[Fraction], part: str, offset: int = 0,
            signed: bool = True) -> MatchReport:
    """Compare b-file entry ``(i, v)`` with ``values[i - offset]``.

    ``values`` must cover every index in the file.
    """
    report = MatchReport()
    for index, found in bfile.entries:
        n = index - offset
        if not 0 <= n < len(values):
            raise BFileError(f"b-file index {index} maps to n = {n}, outside computed range")
        expected = rational_part(values[n], part, signed)
        report.checked.append(
            {"index": index, "n": n, "expected": str(expected), "found": str(found),
             "match": expected == found}
        )
    return report


def load_manifest() -> dict:
    with resources.files("polycauchy").joinpath("data/oeis_manifest.json").open() as f:
        return json.load(f)

"""Assignment records shared by both assignment methods, and their TSV form."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator

from ._io import atomic_write, iter_tsv
from .errors import FormatError

__all__ = ["Method", "Assignment", "AssignmentSet", "write_assignments", "read_assignments"]


class Method(str, enum.Enum):
    KL = "KL"
    GINI = "GINI"


@dataclass(frozen=True)
class Assignment:
    surname: str
    country: str
    score: float
    reliable: bool
    method: Method


@dataclass
class AssignmentSet:
    """Assignments sorted by surname, with the parameters that produced them.

    ``skipped`` counts surnames left unassigned (only the Gini method's
    minimum-count filter can skip any).
    """

    assignments: list[Assignment]
    config: dict = field(default_factory=dict)
    skipped: int = 0

    def __iter__(self) -> Iterator[Assignment]:
        return iter(self.assignments)

    def __len__(self):
        return len(self.assignments)

    def by_surname(self) -> dict[str, Assignment]:
        return {a.surname: a for a in self.assignments}

    @property
    def n_reliable(self) -> int:
        return sum(a.reliable for a in self.assignments)


def format_score(score: float) -> str:
    # "+ 0.0" folds -0.0 into 0.0; %f rounds half-even on the exact binary value
    return f"{score + 0.0:.6f}"


def write_assignments(aset, path) -> None:
    """TSV rows ``surname, country, score, reliable, method`` sorted by surname."""
    rows = sorted(aset, key=lambda a: a.surname)
    with atomic_write(path) as fh:
        fh.writelines(
            f"{a.surname}\t{a.country}\t{format_score(a.score)}\t"
            f"{int(a.reliable)}\t{a.method.value}\n"
            for a in rows
        )


def read_assignments(path) -> AssignmentSet:
    out = []
    seen = set()
    for lineno, (surname, country, score, reliable, method) in iter_tsv(path, 5):
        try:
            value = float(score)
            tag = Method(method)
        except ValueError:
            raise FormatError(f"{path}: bad score or method tag", lineno) from None
        if reliable not in ("0", "1"):
            raise FormatError(f"{path}: reliable flag must be 0 or 1", lineno)
        if not surname or not country or not value >= 0:
            raise FormatError(f"{path}: empty field or negative score", lineno)
        if surname in seen:
            raise FormatError(f"{path}: duplicate surname {surname!r}", lineno)
        seen.add(surname)
        out.append(Assignment(surname, country, value, reliable == "1", tag))
    out.sort(key=lambda a: a.surname)
    return AssignmentSet(out)

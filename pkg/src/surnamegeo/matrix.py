"""Sparse surname x country publication-count matrix."""

from __future__ import annotations

from typing import Iterable, Mapping

from ._io import atomic_write, iter_tsv
from .errors import ConfigError, FormatError

__all__ = [
    "SurnameCountryMatrix",
    "accumulate",
    "merge",
    "save",
    "load",
    "top_countries",
    "surname_count",
    "country_count",
    "write_top_countries",
]


class SurnameCountryMatrix:
    """Counts ``n(s, c)`` of publications carrying a trusted (s, c) linkage.

    Only positive cells are stored.  Country totals and the grand total are
    maintained incrementally by ``add``; mutate through ``add`` only.
    """

    def __init__(self):
        self.counts: dict[str, dict[str, int]] = {}
        self.country_totals: dict[str, int] = {}
        self.grand_total = 0

    def add(self, surname: str, country: str, n: int = 1) -> None:
        if n < 1:
            raise ValueError(f"cell increment must be positive, got {n}")
        row = self.counts.get(surname)
        if row is None:
            row = self.counts[surname] = {}
        row[country] = row.get(country, 0) + n
        self.country_totals[country] = self.country_totals.get(country, 0) + n
        self.grand_total += n

    @property
    def universe(self) -> list[str]:
        """Countries with a positive total, sorted."""
        return sorted(self.country_totals)

    def row(self, surname: str) -> Mapping[str, int]:
        return self.counts.get(surname, {})

    def cells(self):
        """Yield ``(surname, country, count)`` sorted by surname then country."""
        for surname in sorted(self.counts):
            row = self.counts[surname]
            for country in sorted(row):
                yield surname, country, row[country]

    def __len__(self):
        return len(self.counts)

    def __eq__(self, other):
        if not isinstance(other, SurnameCountryMatrix):
            return NotImplemented
        return self.counts == other.counts

    def __repr__(self):
        return (
            f"<SurnameCountryMatrix surnames={len(self.counts)} "
            f"countries={len(self.country_totals)} total={self.grand_total}>"
        )


def accumulate(linkages: Iterable) -> SurnameCountryMatrix:
    """Tally linkages into a new matrix.

    Items need ``surname`` and ``country`` attributes; they are assumed to be
    deduplicated per publication already, so each one adds 1 to its cell.
    """
    m = SurnameCountryMatrix()
    counts = m.counts
    for lk in linkages:
        row = counts.get(lk.surname)
        if row is None:
            row = counts[lk.surname] = {}
        row[lk.country] = row.get(lk.country, 0) + 1
    _recompute_totals(m)
    return m


def _recompute_totals(m: SurnameCountryMatrix) -> None:
    totals: dict[str, int] = {}
    for row in m.counts.values():
        for country, n in row.items():
            totals[country] = totals.get(country, 0) + n
    m.country_totals = totals
    m.grand_total = sum(totals.values())


def merge(a: SurnameCountryMatrix, b: SurnameCountryMatrix) -> SurnameCountryMatrix:
    """Cellwise sum of two matrices built from disjoint publication sets."""
    out = SurnameCountryMatrix()
    for src in (a, b):
        for surname, row in src.counts.items():
            dst = out.counts.setdefault(surname, {})
            for country, n in row.items():
                dst[country] = dst.get(country, 0) + n
    _recompute_totals(out)
    return out


def save(m: SurnameCountryMatrix, path) -> None:
    """Write the matrix as sorted TSV rows ``surname, country, count``."""
    with atomic_write(path) as fh:
        fh.writelines(f"{s}\t{c}\t{n}\n" for s, c, n in m.cells())


def load(path) -> SurnameCountryMatrix:
    m = SurnameCountryMatrix()
    counts = m.counts
    for lineno, (surname, country, raw) in iter_tsv(path, 3):
        if not surname or not country:
            raise FormatError(f"{path}: empty surname or country", lineno)
        if not raw.isdigit() or not raw.isascii():
            raise FormatError(f"{path}: count {raw!r} is not a decimal integer", lineno)
        n = int(raw)
        if n < 1:
            raise FormatError(f"{path}: count must be positive, got {n}", lineno)
        row = counts.setdefault(surname, {})
        if country in row:
            raise FormatError(f"{path}: duplicate row ({surname}, {country})", lineno)
        row[country] = n
    _recompute_totals(m)
    return m


def surname_count(m: SurnameCountryMatrix) -> int:
    return len(m.counts)


def country_count(m: SurnameCountryMatrix) -> int:
    return len(m.country_totals)


def top_countries(m, assignments, k: int, reliable_only: bool = True):
    """Countries ranked by number of surnames assigned to them.

    Only reliable assignments count unless ``reliable_only`` is false.  Ties
    are broken by country name.  Assignments to countries absent from ``m``
    are rejected, since they cannot come from this matrix.
    """
    if not isinstance(k, int) or k < 1:
        raise ConfigError(f"top-k must be a positive integer, got {k!r}")
    tally: dict[str, int] = {}
    for a in assignments:
        if reliable_only and not a.reliable:
            continue
        if m is not None and a.country not in m.country_totals:
            raise ConfigError(f"assigned country {a.country!r} is not in the matrix")
        tally[a.country] = tally.get(a.country, 0) + 1
    ranked = sorted(tally.items(), key=lambda item: (-item[1], item[0]))
    return ranked[:k]


def write_top_countries(ranked, path) -> None:
    """Report TSV: ``country, surnames`` per line in rank order."""
    with atomic_write(path) as fh:
        fh.writelines(f"{country}\t{n}\n" for country, n in ranked)

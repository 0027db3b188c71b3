"""Evaluation of assignments against a surname -> language control list.

Languages are grouped under a *normalized country*, and each normalized
country carries the set of member countries where the language is official
(or regionally confined).  An assignment is correct when the assigned
country belongs to that member set, so an English surname assigned to USA
counts as correct.

Language map file, tab separated::

    lang     German     Germany
    members  Germany    AUSTRIA;GERMANY;LIECHTENSTEIN
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from ._io import atomic_write, iter_tsv
from .errors import ConfigError, FormatError
from .records import CountryNormalizer, normalize_country, normalize_surname

log = logging.getLogger(__name__)

__all__ = [
    "ControlEntry",
    "LanguageCountryMap",
    "ValidationRow",
    "ValidationReport",
    "load_control",
    "load_langmap",
    "evaluate",
    "format_pct",
    "render_report",
    "default_langmap_path",
]


def _lang_key(language: str) -> str:
    return " ".join(language.split()).casefold()


@dataclass(frozen=True)
class ControlEntry:
    surname: str
    language: str


@dataclass
class LanguageCountryMap:
    """``languages``: language key -> normalized country; ``members``: normalized
    country -> set of canonical member countries."""

    languages: dict[str, str] = field(default_factory=dict)
    members: dict[str, frozenset[str]] = field(default_factory=dict)

    def group(self, language: str) -> str:
        return self.languages[_lang_key(language)]

    def add_language(self, language, country):
        key, country = _lang_key(language), normalize_country(country)
        if not key or not country:
            raise ConfigError("empty language or normalized country")
        previous = self.languages.get(key)
        if previous is not None and previous != country:
            raise ConfigError(
                f"language {language!r} mapped to both {previous!r} and {country!r}"
            )
        self.languages[key] = country

    def add_members(self, country, members, norm=None):
        country = normalize_country(country)
        names = {normalize_country(c, norm) for c in members}
        names.discard("")
        if not country or not names:
            raise ConfigError(f"empty member set for {country!r}")
        self.members[country] = self.members.get(country, frozenset()) | frozenset(names)

    def check(self):
        missing = sorted(set(self.languages.values()) - set(self.members))
        if missing:
            raise ConfigError(f"normalized countries without members: {', '.join(missing)}")


def load_langmap(path, norm: CountryNormalizer | None = None) -> LanguageCountryMap:
    lm = LanguageCountryMap()
    try:
        for lineno, (tag, key, value) in iter_tsv(path, 3):
            if tag == "lang":
                lm.add_language(key, value)
            elif tag == "members":
                lm.add_members(key, value.split(";"), norm)
            else:
                raise ConfigError(f"{path}: line {lineno}: unknown row tag {tag!r}")
    except FormatError as exc:
        raise ConfigError(str(exc)) from exc
    lm.check()
    return lm


def load_control(path, langmap: LanguageCountryMap | None = None) -> list[ControlEntry]:
    """Read ``surname, language`` rows; surnames are canonicalized.

    With ``langmap`` given, every language must be known to it.  Surnames
    listed under several languages are kept once per entry.
    """
    entries = []
    try:
        rows = list(iter_tsv(path, 2))
    except FormatError as exc:
        raise ConfigError(str(exc)) from exc
    for lineno, (raw, language) in rows:
        surname = normalize_surname(raw)
        language = " ".join(language.split())
        if not surname or not language:
            raise ConfigError(f"{path}: line {lineno}: empty surname or language")
        entries.append(ControlEntry(surname, language))
    if langmap is not None:
        unknown = sorted({e.language for e in entries if _lang_key(e.language) not in langmap.languages})
        if unknown:
            raise ConfigError(f"control list uses unknown languages: {', '.join(unknown)}")
    langs: dict[str, set[str]] = {}
    for e in entries:
        langs.setdefault(e.surname, set()).add(_lang_key(e.language))
    for surname, found in sorted(langs.items()):
        if len(found) > 1:
            log.warning("control surname %s listed under %d languages", surname, len(found))
    return entries


@dataclass
class ValidationRow:
    """Integer tallies for one normalized country (or the total row)."""

    normalized_country: str
    matched: int = 0
    covered: int = 0
    correct_count: int = 0

    @property
    def coverage(self) -> Fraction:
        return Fraction(self.covered, self.matched) if self.matched else Fraction(0)

    @property
    def correct(self) -> Fraction:
        return Fraction(self.correct_count, self.covered) if self.covered else Fraction(0)


@dataclass
class ValidationReport:
    rows: list[ValidationRow]
    unmatched: int = 0

    @property
    def total(self) -> ValidationRow:
        return ValidationRow(
            "Total",
            sum(r.matched for r in self.rows),
            sum(r.covered for r in self.rows),
            sum(r.correct_count for r in self.rows),
        )


def evaluate(assignments, control, langmap: LanguageCountryMap) -> ValidationReport:
    """Tally matched, covered and correct control surnames per normalized country."""
    by_surname = {a.surname: a for a in assignments}
    rows: dict[str, ValidationRow] = {}
    unmatched = 0
    for entry in control:
        try:
            group = langmap.group(entry.language)
        except KeyError:
            raise ConfigError(f"unknown language {entry.language!r}") from None
        row = rows.setdefault(group, ValidationRow(group))
        a = by_surname.get(entry.surname)
        if a is None:
            unmatched += 1
            continue
        row.matched += 1
        if a.reliable:
            row.covered += 1
            if a.country in langmap.members[group]:
                row.correct_count += 1
    return ValidationReport([rows[k] for k in sorted(rows)], unmatched)


def format_pct(frac: Fraction) -> str:
    """Percentage with two decimals, rounded half-to-even on the exact ratio."""
    hundredths = round(frac * 10000)
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def render_report(report: ValidationReport, path) -> None:
    """TSV ``normalized_country, surnames, coverage_pct, correct_pct`` + Total row."""
    with atomic_write(path) as fh:
        for row in report.rows + [report.total]:
            fh.write(
                f"{row.normalized_country}\t{row.matched}\t"
                f"{format_pct(row.coverage)}\t{format_pct(row.correct)}\n"
            )


def default_langmap_path():
    """Path of the bundled language map (21 languages, 12 normalized countries)."""
    from importlib.resources import files

    return files("surnamegeo") / "data" / "langmap.tsv"

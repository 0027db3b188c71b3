"""Publication records: parsing, validation and name canonicalization.

Input is line-delimited JSON, one publication per line::

    {"id": "p1", "year": 2010,
     "authors": [{"seq": 1, "surname": "Noyons", "initials": "E"}],
     "addresses": [{"seq": 1, "country": "Netherlands"}],
     "reprint": {"author_seq": 1, "address_seq": 1},
     "links": [{"author_seq": 1, "address_seq": 1}]}

Surnames and countries are canonicalized while parsing, so every
``PublicationRecord`` that leaves this module is ready for linkage
extraction.
"""

from __future__ import annotations

import json
import logging
import unicodedata
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from ._io import iter_tsv
from .errors import ConfigError, FormatError, RecordError, SemanticError

log = logging.getLogger(__name__)

__all__ = [
    "AuthorEntry",
    "AddressEntry",
    "ReprintInfo",
    "PublicationRecord",
    "CountryNormalizer",
    "DEFAULT_COUNTRY_ALIASES",
    "normalize_surname",
    "normalize_country",
    "parse_record",
    "serialize_record",
    "load_country_map",
    "RecordReader",
    "read_records",
]

YEAR_RANGE = (1900, 2100)

DEFAULT_COUNTRY_ALIASES = {
    "USSR": "RUSSIA",
    "FED REP GER": "GERMANY",
    "FEDERAL REPUBLIC OF GERMANY": "GERMANY",
    "PEOPLES R CHINA": "CHINA",
}


def _canonical_text(raw: str) -> str:
    # upper() can emit decomposed sequences, so compose again afterwards;
    # iterate to a fixed point to keep the function idempotent.
    text = unicodedata.normalize("NFC", raw)
    for _ in range(4):
        new = unicodedata.normalize("NFC", " ".join(text.split()).upper())
        new = " ".join(new.split())
        if new == text:
            break
        text = new
    return text


def normalize_surname(raw: str) -> str:
    """Canonical surname: NFC-composed, uppercase, whitespace trimmed and collapsed.

    Diacritics and hyphens are kept.  An empty return value means the input
    carries no usable surname.

    >>> normalize_surname("  van der Berg ")
    'VAN DER BERG'
    """
    return _canonical_text(raw)


@dataclass(frozen=True)
class CountryNormalizer:
    """Alias table mapping raw country spellings to canonical names.

    Keys and values are stored canonicalized.  Canonical values must be fixed
    points of the table (no alias chains), which makes normalization
    idempotent.
    """

    alias_map: Mapping[str, str] = field(
        default_factory=lambda: dict(DEFAULT_COUNTRY_ALIASES)
    )

    def __post_init__(self):
        clean = {}
        for raw, canon in self.alias_map.items():
            key, value = _canonical_text(raw), _canonical_text(canon)
            if not key or not value:
                raise ConfigError(f"empty country alias entry: {raw!r} -> {canon!r}")
            clean[key] = value
        for value in set(clean.values()):
            target = clean.get(value, value)
            if target != value:
                raise ConfigError(
                    f"country alias chain: {value!r} is canonical but maps to {target!r}"
                )
        object.__setattr__(self, "alias_map", clean)

    def __call__(self, raw: str) -> str:
        return normalize_country(raw, self)


def normalize_country(raw: str, norm: CountryNormalizer | None = None) -> str:
    """Canonical country name; empty string when ``raw`` is blank."""
    if norm is None:
        norm = _DEFAULT_NORMALIZER
    key = _canonical_text(raw)
    if not key:
        return ""
    return norm.alias_map.get(key, key)


_DEFAULT_NORMALIZER = CountryNormalizer()


def load_country_map(path=None) -> CountryNormalizer:
    """Build a normalizer from the built-in defaults overridden by a TSV file.

    The file has two columns, raw spelling and canonical name.  ``path=None``
    gives the defaults only.
    """
    aliases = dict(DEFAULT_COUNTRY_ALIASES)
    if path is None:
        return CountryNormalizer(aliases)
    seen: dict[str, str] = {}
    try:
        for lineno, (raw, canon) in iter_tsv(path, 2):
            key, value = _canonical_text(raw), _canonical_text(canon)
            if not key or not value:
                raise ConfigError(f"{path}: line {lineno}: empty alias field")
            if key in seen and seen[key] != value:
                raise ConfigError(
                    f"{path}: line {lineno}: {key!r} mapped to both "
                    f"{seen[key]!r} and {value!r}"
                )
            seen[key] = value
    except FormatError as exc:
        raise ConfigError(str(exc)) from exc
    aliases.update(seen)
    return CountryNormalizer(aliases)


@dataclass(frozen=True)
class AuthorEntry:
    seq: int
    surname: str
    initials: str | None = None


@dataclass(frozen=True)
class AddressEntry:
    seq: int
    country: str


@dataclass(frozen=True)
class ReprintInfo:
    author_seq: int
    address_seq: int


@dataclass(frozen=True)
class PublicationRecord:
    id: str
    year: int
    authors: tuple[AuthorEntry, ...]
    addresses: tuple[AddressEntry, ...] = ()
    reprint: ReprintInfo | None = None
    links: tuple[tuple[int, int], ...] = ()

    def author(self, seq: int) -> AuthorEntry:
        return self.authors[seq - 1]

    def address(self, seq: int) -> AddressEntry:
        return self.addresses[seq - 1]


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _require(obj, key, kind, lineno, what="record"):
    if key not in obj:
        raise FormatError(f"{what} is missing required field {key!r}", lineno)
    value = obj[key]
    if kind is int:
        ok = _is_int(value)
    else:
        ok = isinstance(value, kind)
    if not ok:
        raise FormatError(
            f"{what} field {key!r} must be {kind.__name__}, got {type(value).__name__}",
            lineno,
        )
    return value


def _seq_pair(obj, lineno, what):
    if not isinstance(obj, dict):
        raise FormatError(f"{what} must be an object", lineno)
    return (
        _require(obj, "author_seq", int, lineno, what),
        _require(obj, "address_seq", int, lineno, what),
    )


def _check_seqs(seqs, kind, rid, lineno):
    if sorted(seqs) != list(range(1, len(seqs) + 1)):
        raise SemanticError(
            f"{kind} seqs must be unique and contiguous from 1, got {seqs}",
            rid,
            lineno,
        )


def parse_record(
    line: str,
    norm: CountryNormalizer | None = None,
    lineno: int | None = None,
) -> PublicationRecord:
    """Parse one JSON line into a validated ``PublicationRecord``.

    Raises ``FormatError`` for syntax and type problems and ``SemanticError``
    for invariant violations (bad seqs, dangling references, empty names,
    year out of range).  Nothing else escapes for any input string.
    """
    try:
        obj = json.loads(line)
    except (ValueError, RecursionError) as exc:
        raise FormatError(f"invalid JSON: {exc}", lineno) from None
    if not isinstance(obj, dict):
        raise FormatError("record must be a JSON object", lineno)

    rid = _require(obj, "id", str, lineno)
    year = _require(obj, "year", int, lineno)
    raw_authors = _require(obj, "authors", list, lineno)
    raw_addresses = obj.get("addresses", [])
    if not isinstance(raw_addresses, list):
        raise FormatError("field 'addresses' must be list", lineno)
    raw_links = obj.get("links", [])
    if raw_links is None:
        raw_links = []
    if not isinstance(raw_links, list):
        raise FormatError("field 'links' must be list", lineno)
    raw_reprint = obj.get("reprint")

    authors = []
    for item in raw_authors:
        if not isinstance(item, dict):
            raise FormatError("author entry must be an object", lineno)
        seq = _require(item, "seq", int, lineno, "author")
        surname = _require(item, "surname", str, lineno, "author")
        initials = item.get("initials")
        if initials is not None and not isinstance(initials, str):
            raise FormatError("author field 'initials' must be str", lineno)
        authors.append((seq, surname, initials))
    addresses = []
    for item in raw_addresses:
        if not isinstance(item, dict):
            raise FormatError("address entry must be an object", lineno)
        seq = _require(item, "seq", int, lineno, "address")
        country = _require(item, "country", str, lineno, "address")
        addresses.append((seq, country))
    links = [_seq_pair(item, lineno, "link") for item in raw_links]
    reprint = None if raw_reprint is None else _seq_pair(raw_reprint, lineno, "reprint")

    # semantic checks
    if not rid.strip() or any(ch in rid for ch in "\t\r\n"):
        raise SemanticError("id must be non-empty and free of tabs/newlines", rid, lineno)
    if not YEAR_RANGE[0] <= year <= YEAR_RANGE[1]:
        raise SemanticError(f"year {year} outside {YEAR_RANGE}", rid, lineno)
    _check_seqs([a[0] for a in authors], "author", rid, lineno)
    _check_seqs([a[0] for a in addresses], "address", rid, lineno)

    author_entries = []
    for seq, surname, initials in sorted(authors):
        canon = normalize_surname(surname)
        if not canon:
            raise SemanticError(f"author {seq} has an empty surname", rid, lineno)
        author_entries.append(AuthorEntry(seq, canon, initials))
    address_entries = []
    for seq, country in sorted(addresses):
        canon = normalize_country(country, norm)
        if not canon:
            raise SemanticError(f"address {seq} has an empty country", rid, lineno)
        address_entries.append(AddressEntry(seq, canon))

    n_auth, n_addr = len(author_entries), len(address_entries)
    for a_seq, d_seq in links + ([reprint] if reprint else []):
        if not (1 <= a_seq <= n_auth and 1 <= d_seq <= n_addr):
            raise SemanticError(
                f"link ({a_seq}, {d_seq}) references a missing author or address",
                rid,
                lineno,
            )

    return PublicationRecord(
        id=rid,
        year=year,
        authors=tuple(author_entries),
        addresses=tuple(address_entries),
        reprint=ReprintInfo(*reprint) if reprint else None,
        links=tuple(links),
    )


def serialize_record(rec: PublicationRecord) -> str:
    """Inverse of ``parse_record`` for already-canonical records."""
    obj = {
        "id": rec.id,
        "year": rec.year,
        "authors": [
            {"seq": a.seq, "surname": a.surname}
            | ({"initials": a.initials} if a.initials is not None else {})
            for a in rec.authors
        ],
        "addresses": [{"seq": d.seq, "country": d.country} for d in rec.addresses],
        "links": [{"author_seq": a, "address_seq": d} for a, d in rec.links],
    }
    if rec.reprint is not None:
        obj["reprint"] = {
            "author_seq": rec.reprint.author_seq,
            "address_seq": rec.reprint.address_seq,
        }
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


class RecordReader:
    """Iterate parsed records from lines, counting or raising on bad ones.

    In lenient mode (the default) bad records are skipped, logged at warning
    level and kept in ``errors``; in strict mode the first one is raised.
    """

    def __init__(
        self,
        lines: Iterable[str],
        norm: CountryNormalizer | None = None,
        strict: bool = False,
    ):
        self.lines = lines
        self.norm = norm
        self.strict = strict
        self.n_read = 0
        self.n_skipped = 0
        self.errors: list[RecordError] = []

    def __iter__(self) -> Iterator[PublicationRecord]:
        for lineno, line in enumerate(self.lines, 1):
            if not line.strip():
                continue
            try:
                rec = parse_record(line, self.norm, lineno)
            except RecordError as exc:
                if self.strict:
                    raise
                self.n_skipped += 1
                self.errors.append(exc)
                log.warning("skipping record: %s", exc)
                continue
            self.n_read += 1
            yield rec


def read_records(path, norm=None, strict=False) -> Iterator[PublicationRecord]:
    """Yield records from a JSONL file; see ``RecordReader`` for error handling."""
    with open(path, encoding="utf-8", newline="\n") as fh:
        yield from RecordReader(fh, norm, strict)

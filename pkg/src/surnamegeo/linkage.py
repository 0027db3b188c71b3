"""Trusted author-country linkages extracted from single publications.

Four kinds of evidence tie a surname to a country:

* REPRINT: the reprint (corresponding) author and the reprint address.
* REGISTERED: explicit author-address links recorded with the publication.
* FIRST_AUTHOR: the first author and the first address.
* SINGLE_COUNTRY: every author, when all addresses share one country.

A (surname, country) pair counts once per publication however many rules
or co-authors produce it.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

from ._io import atomic_write, iter_tsv
from .errors import FormatError
from .records import PublicationRecord

log = logging.getLogger(__name__)

__all__ = [
    "Rule",
    "TrustedLinkage",
    "StreamCounts",
    "extract_linkages",
    "stream_extract",
    "write_linkages",
    "read_linkages",
]


class Rule(enum.IntEnum):
    """Evidence rule; lower value wins when several rules yield the same pair."""

    REPRINT = 1
    REGISTERED = 2
    FIRST_AUTHOR = 3
    SINGLE_COUNTRY = 4


@dataclass(frozen=True, order=True)
class TrustedLinkage:
    surname: str
    country: str
    pub_id: str
    rule: Rule


def extract_linkages(rec: PublicationRecord) -> list[TrustedLinkage]:
    """All trusted linkages of one record, deduplicated and sorted by pair."""
    best: dict[tuple[str, str], Rule] = {}

    def add(author_seq, address_seq, rule):
        pair = (rec.author(author_seq).surname, rec.address(address_seq).country)
        if pair not in best or rule < best[pair]:
            best[pair] = rule

    if rec.reprint is not None:
        add(rec.reprint.author_seq, rec.reprint.address_seq, Rule.REPRINT)
    for author_seq, address_seq in rec.links:
        add(author_seq, address_seq, Rule.REGISTERED)
    if rec.authors and rec.addresses:
        add(1, 1, Rule.FIRST_AUTHOR)
        if len({d.country for d in rec.addresses}) == 1:
            for a in rec.authors:
                add(a.seq, 1, Rule.SINGLE_COUNTRY)

    return [
        TrustedLinkage(surname, country, rec.id, rule)
        for (surname, country), rule in sorted(best.items())
    ]


@dataclass
class StreamCounts:
    processed: int = 0
    linkages: int = 0


def stream_extract(
    records: Iterable[PublicationRecord],
    counts: StreamCounts | None = None,
    log_every: int = 100_000,
) -> Iterator[TrustedLinkage]:
    """Lazily concatenate ``extract_linkages`` over a record stream.

    Progress is logged every ``log_every`` records and tallied into
    ``counts`` when one is given.  Skipped records are counted by the reader
    that produced the stream (see ``records.RecordReader``).
    """
    if counts is None:
        counts = StreamCounts()
    for rec in records:
        found = extract_linkages(rec)
        counts.processed += 1
        counts.linkages += len(found)
        if log_every and counts.processed % log_every == 0:
            log.info("processed=%d linkages=%d", counts.processed, counts.linkages)
        yield from found


def write_linkages(linkages: Iterable[TrustedLinkage], path) -> int:
    """Dump linkages as TSV (surname, country, pub_id, rule); returns row count."""
    n = 0
    with atomic_write(path) as fh:
        for lk in linkages:
            fh.write(f"{lk.surname}\t{lk.country}\t{lk.pub_id}\t{lk.rule.name}\n")
            n += 1
    return n


def read_linkages(path) -> Iterator[TrustedLinkage]:
    for lineno, (surname, country, pub_id, rule) in iter_tsv(path, 4):
        try:
            tag = Rule[rule]
        except KeyError:
            raise FormatError(f"{path}: unknown rule tag {rule!r}", lineno) from None
        if not surname or not country or not pub_id:
            raise FormatError(f"{path}: empty linkage field", lineno)
        yield TrustedLinkage(surname, country, pub_id, tag)

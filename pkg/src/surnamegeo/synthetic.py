"""Synthetic corpora with known surname origins, for tests and demos."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linkage import Rule
from .records import AddressEntry, AuthorEntry, PublicationRecord, ReprintInfo

__all__ = ["PlantedCorpus", "make_surnames", "make_planted_corpus", "write_linkage_rows"]

COUNTRIES = (
    "DENMARK", "FINLAND", "FRANCE", "GERMANY",
    "GREECE", "ITALY", "JAPAN", "SPAIN",
    "NETHERLANDS", "PORTUGAL", "ICELAND", "ENGLAND",
)

_SYLLABLES = (
    "ka", "ro", "mi", "sen", "dal", "ber", "to", "vin", "lu", "nak",
    "sor", "el", "gar", "ha", "pe", "ti", "mon", "ras", "ul", "ze",
)


def make_surnames(n: int, rng: np.random.Generator) -> list[str]:
    """``n`` distinct uppercase pseudo-surnames."""
    out: list[str] = []
    seen = set()
    while len(out) < n:
        k = int(rng.integers(2, 5))
        name = "".join(_SYLLABLES[i] for i in rng.integers(0, len(_SYLLABLES), k)).upper()
        if name not in seen:
            seen.add(name)
            out.append(name)
    return out


@dataclass
class PlantedCorpus:
    records: list[PublicationRecord]
    truth: dict[str, str]
    countries: list[str]
    cosmopolitan: list[str]


def make_planted_corpus(
    n_records: int = 2000,
    n_countries: int = 8,
    n_surnames: int = 100,
    n_cosmopolitan: int = 20,
    home_prob: float = 0.97,
    seed: int = 0,
) -> PlantedCorpus:
    """Records whose planted surnames each publish mostly from a home country.

    Every record has a home country.  The first author is drawn from that
    country's planted pool; co-authors stay in the pool with probability
    ``home_prob``, otherwise they are visitors from another pool or carry
    one of the ``n_cosmopolitan`` surnames spread evenly over all countries.
    Address layouts cycle through one-country, two-country, reprint and
    registered-link variants so all four linkage rules fire.
    """
    if not 1 <= n_countries <= len(COUNTRIES):
        raise ValueError(f"n_countries must be in 1..{len(COUNTRIES)}")
    rng = np.random.default_rng(seed)
    countries = list(COUNTRIES[:n_countries])
    names = make_surnames(n_surnames + n_cosmopolitan, rng)
    planted, cosmo = names[:n_surnames], names[n_surnames:]
    truth = {s: countries[i % n_countries] for i, s in enumerate(planted)}
    pools = {c: [s for s in planted if truth[s] == c] for c in countries}

    records = []
    for r in range(n_records):
        home = countries[int(rng.integers(n_countries))]
        surnames = [pools[home][int(rng.integers(len(pools[home])))]]
        for _ in range(int(rng.integers(0, 4))):
            u = rng.random()
            if u < home_prob:
                pool = pools[home]
            elif cosmo and u < (1 + home_prob) / 2:
                pool = cosmo
            else:
                pool = pools[countries[int(rng.integers(n_countries))]]
            surnames.append(pool[int(rng.integers(len(pool)))])
        for _ in range(int(rng.integers(0, 2)) if cosmo else 0):
            surnames.append(cosmo[int(rng.integers(len(cosmo)))])
        authors = tuple(AuthorEntry(i + 1, s) for i, s in enumerate(surnames))

        layout = r % 4
        if layout == 0 or n_countries == 1:
            addresses = (AddressEntry(1, home),)
        elif layout == 1:
            addresses = (AddressEntry(1, home), AddressEntry(2, home))
        else:
            away = countries[(countries.index(home) + 1 + int(rng.integers(n_countries - 1))) % n_countries]
            addresses = (AddressEntry(1, home), AddressEntry(2, away))
        reprint = None
        links: tuple[tuple[int, int], ...] = ()
        if layout == 2:
            reprint = ReprintInfo(1, 1)
        elif layout == 3:
            links = tuple((a.seq, 1) for a in authors if truth.get(a.surname) == home)
        records.append(
            PublicationRecord(f"P{r:06d}", 1980 + r % 34, authors, addresses, reprint, links)
        )
    return PlantedCorpus(records, truth, countries, cosmo)


def write_linkage_rows(
    path,
    n_rows: int = 1_000_000,
    n_surnames: int = 200_000,
    n_countries: int = 120,
    home_prob: float = 0.7,
    seed: int = 0,
) -> None:
    """Write ``n_rows`` random linkage TSV rows (one publication per row).

    Surname frequencies follow a Zipf-like law; each surname has a home
    country it is linked to with probability ``home_prob``.
    """
    rng = np.random.default_rng(seed)
    countries = [f"COUNTRY{i:03d}" for i in range(n_countries)]
    surnames = [f"SURNAME{i:06d}" for i in range(n_surnames)]
    home = rng.integers(0, n_countries, n_surnames)
    weights = 1.0 / np.arange(1, n_surnames + 1) ** 0.8
    s_idx = rng.choice(n_surnames, size=n_rows, p=weights / weights.sum())
    c_idx = np.where(
        rng.random(n_rows) < home_prob, home[s_idx], rng.integers(0, n_countries, n_rows)
    )
    tag = Rule.SINGLE_COUNTRY.name
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        chunk = 100_000
        for start in range(0, n_rows, chunk):
            stop = min(start + chunk, n_rows)
            fh.write(
                "".join(
                    f"{surnames[s]}\t{countries[c]}\tW{i:08d}\t{tag}\n"
                    for i, s, c in zip(range(start, stop), s_idx[start:stop], c_idx[start:stop])
                )
            )

"""
Trusted author-country linkages
===============================

Only unambiguous evidence ties a surname to a country.  This walks through
the four evidence rules on a handful of hand-written records.
"""

import json

from surnamegeo.linkage import extract_linkages
from surnamegeo.matrix import accumulate, surname_count, country_count
from surnamegeo.records import parse_record

lines = [
    # one-country paper: every author goes to the Netherlands
    {"id": "p1", "year": 2011,
     "authors": [{"seq": 1, "surname": "Noyons"}, {"seq": 2, "surname": "Costas"}],
     "addresses": [{"seq": 1, "country": "Netherlands"}, {"seq": 2, "country": "Netherlands"}]},
    # international paper: first author -> first address, reprint author -> reprint address
    {"id": "p2", "year": 2013,
     "authors": [{"seq": 1, "surname": "Robinson-Garcia"}, {"seq": 2, "surname": "Noyons"}],
     "addresses": [{"seq": 1, "country": "Spain"}, {"seq": 2, "country": "Netherlands"}],
     "reprint": {"author_seq": 2, "address_seq": 2}},
    # registered links, and an old country name that gets normalized
    {"id": "p3", "year": 1988,
     "authors": [{"seq": 1, "surname": "Ivanov"}, {"seq": 2, "surname": "Weber"}],
     "addresses": [{"seq": 1, "country": "USSR"}, {"seq": 2, "country": "Fed Rep Ger"}],
     "links": [{"author_seq": 2, "address_seq": 2}]},
    # no address: no evidence at all
    {"id": "p4", "year": 2000, "authors": [{"seq": 1, "surname": "Tanaka"}]},
]

records = [parse_record(json.dumps(obj)) for obj in lines]

for rec in records:
    found = extract_linkages(rec)
    print(f"{rec.id}: {len(found)} linkage(s)")
    for lk in found:
        print(f"    {lk.surname:<16} {lk.country:<12} {lk.rule.name}")

# Counting is per publication: NOYONS appears in p1 and p2
m = accumulate(lk for rec in records for lk in extract_linkages(rec))
print()
print(m)
print("NOYONS row:", dict(m.row("NOYONS")))
print("surnames:", surname_count(m), "countries:", country_count(m))

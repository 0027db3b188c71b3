"""
Checking assignments against a control list
===========================================

A control list maps surnames to languages; languages are grouped under a
normalized country whose member countries all count as a correct answer.
Here the control list is built from a synthetic corpus with known origins
and scored with the bundled language map.
"""

from surnamegeo.gini import assign_gini
from surnamegeo.kl import assign_kl
from surnamegeo.linkage import stream_extract
from surnamegeo.matrix import accumulate
from surnamegeo.synthetic import make_planted_corpus
from surnamegeo.validate import ControlEntry, default_langmap_path, evaluate, format_pct, load_langmap

langmap = load_langmap(default_langmap_path())
print("Spanish surnames are correct in:", ", ".join(sorted(langmap.members["SPAIN"]))[:80], "...")

language_of = {
    "DENMARK": "Danish", "FINLAND": "Finnish", "FRANCE": "French", "GERMANY": "German",
    "GREECE": "Greek", "ITALY": "Italian", "JAPAN": "Japanese", "SPAIN": "Spanish",
}
corpus = make_planted_corpus(n_records=2000, n_countries=8, seed=1)
m = accumulate(stream_extract(corpus.records))
control = [ControlEntry(s, language_of[c]) for s, c in sorted(corpus.truth.items())]
# one surname the corpus never saw
control.append(ControlEntry("NAKAMURA", "Japanese"))

for name, aset in (("KL", assign_kl(m)), ("GINI", assign_gini(m))):
    report = evaluate(aset, control, langmap)
    print()
    print(f"{name}: unmatched control surnames = {report.unmatched}")
    print(f"    {'country':<12} {'surnames':>8} {'% coverage':>11} {'% correct':>10}")
    for row in report.rows + [report.total]:
        print(f"    {row.normalized_country:<12} {row.matched:>8} "
              f"{format_pct(row.coverage):>11} {format_pct(row.correct):>10}")

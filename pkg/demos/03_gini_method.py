"""
Relative concentration and the Gini index
=========================================

Raw counts favour big countries.  Dividing a surname's count in each country
by that country's total makes small countries competitive, and the Gini
index of those shares (over every country, zeros included) tells how
concentrated the surname is.
"""

import numpy as np

from surnamegeo.gini import assign_gini, gini, relativized_shares
from surnamegeo.kl import assign_kl
from surnamegeo.matrix import SurnameCountryMatrix

# USA has 20x more publications than Iceland
m = SurnameCountryMatrix()
m.add("GUDMUNDSSON", "USA", 10)
m.add("GUDMUNDSSON", "ICELAND", 5)
m.add("SMITH", "USA", 990)
m.add("SMITH", "ICELAND", 45)

x = relativized_shares(m.row("GUDMUNDSSON"), m.country_totals, m.universe)
print("universe:", m.universe)
print("relativized shares:", x)
print("Gini:", round(gini(x), 6))

by_kl = assign_kl(m).by_surname()["GUDMUNDSSON"].country
by_gini = assign_gini(m).by_surname()["GUDMUNDSSON"].country
print("modal country:", by_kl, "| most concentrated:", by_gini)

# Lorenz curve of a share vector: cumulative share held by the bottom k entries.
# The Gini index is twice the area between this curve and the diagonal.
shares = np.array([0.0, 0.0, 0.01, 0.02, 0.3])
v = np.sort(shares)
lorenz = np.concatenate([[0.0], np.cumsum(v) / v.sum()])
pop = np.linspace(0.0, 1.0, v.size + 1)
area = np.sum((lorenz[1:] + lorenz[:-1]) / 2 * np.diff(pop))
print()
print("Lorenz points:", np.round(lorenz, 4))
print("1 - 2 * area under Lorenz:", round(1 - 2 * area, 6), "| gini():", round(gini(shares), 6))

# Bounds: 0 for equal entries, (n - 1) / n for a single positive entry
print("equal:", gini([0.2] * 4), "| point mass over 4:", gini([1, 0, 0, 0]))

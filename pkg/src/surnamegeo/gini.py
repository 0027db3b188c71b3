"""Method 2: assignment by relative concentration, scored with the Gini index.

A surname's count in each country is divided by that country's total
trusted-linkage count, so large countries do not win by size alone.  The
surname goes to the country with the largest such share, and the Gini index
of the share vector over *all* corpus countries (zeros included) is
attached as a concentration score.  No cut is applied: every surviving
surname is reliable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .assignment import Assignment, AssignmentSet, Method
from .errors import ConfigError, DomainError

__all__ = ["GiniConfig", "relativized_shares", "gini", "sparse_gini", "assign_gini"]


@dataclass(frozen=True)
class GiniConfig:
    """``min_count`` drops cells with fewer publications (0 keeps all)."""

    min_count: int = 0

    def __post_init__(self):
        if isinstance(self.min_count, bool) or not isinstance(self.min_count, int):
            raise ConfigError(f"min_count must be an integer, got {self.min_count!r}")
        if self.min_count < 0:
            raise ConfigError(f"min_count must be >= 0, got {self.min_count}")


def relativized_shares(counts, totals, universe, min_count: int = 0) -> np.ndarray:
    """``x(c) = n(s, c) / T(c)`` over ``universe``; filtered cells are 0.

    Raises ``DomainError`` when the filter removes every cell.
    """
    floor = max(1, min_count)
    x = np.zeros(len(universe), dtype=np.float64)
    for i, c in enumerate(universe):
        n = counts.get(c, 0)
        if n >= floor:
            x[i] = n / totals[c]
    if not x.any():
        raise DomainError("every count of the surname was filtered out")
    return x


def _pair_sum(values: list[float]) -> float:
    """``sum_i sum_j |v_i - v_j|`` via the sorted-rank identity, O(k log k)."""
    k = len(values)
    if k < 2:
        return 0.0
    ys = sorted(values)
    if ys[0] == ys[-1]:
        return 0.0
    return 2.0 * math.fsum((2 * i - k + 1) * y for i, y in enumerate(ys))


def sparse_gini(nonzero: list[float], n: int) -> float:
    """Gini index of a length-``n`` vector given only its positive entries.

    Zero entries contribute ``|x_i - 0|`` against every positive entry, which
    gives ``G = (S + 2 (n - k) sum(x)) / (2 n sum(x))`` where ``S`` is the
    pairwise-difference sum over the ``k`` positive entries.
    """
    k = len(nonzero)
    if k == 0:
        raise DomainError("Gini index of an all-zero vector")
    if n < k:
        raise ValueError("vector length smaller than its support")
    total = math.fsum(nonzero)
    return (_pair_sum(nonzero) / total + 2 * (n - k)) / (2 * n)


def gini(x) -> float:
    """Gini index ``sum_ij |x_i - x_j| / (2 n^2 mean(x))`` of a non-negative vector.

    Ranges from 0 (all entries equal) to ``(n - 1) / n`` (a single positive
    entry).

    >>> gini([1, 0, 0, 0])
    0.75
    """
    arr = np.asarray(x, dtype=np.float64).ravel()
    if arr.size == 0:
        raise DomainError("Gini index of an empty vector")
    if (arr < 0).any() or not np.isfinite(arr).all():
        raise DomainError("Gini index needs finite non-negative entries")
    return sparse_gini(arr[arr > 0].tolist(), arr.size)


def assign_gini(m, cfg: GiniConfig | None = None) -> AssignmentSet:
    """Assign each surname to the country of its largest relativized share."""
    cfg = cfg or GiniConfig()
    if len(m) == 0:
        raise ConfigError("cannot assign surnames from an empty matrix")
    totals = m.country_totals
    n = len(totals)
    floor = max(1, cfg.min_count)

    out = []
    skipped = 0
    for s in sorted(m.counts):
        shares = {c: cnt / totals[c] for c, cnt in m.counts[s].items() if cnt >= floor}
        if not shares:
            skipped += 1
            continue
        country, _ = min(shares.items(), key=lambda kv: (-kv[1], kv[0]))
        score = sparse_gini(list(shares.values()), n)
        out.append(Assignment(s, country, score, True, Method.GINI))
    config = {"method": Method.GINI.value, "min_count": cfg.min_count}
    return AssignmentSet(out, config, skipped=skipped)

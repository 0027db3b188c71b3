"""Method 1: modal-country assignment with a KL-divergence confidence cut.

Each surname goes to the country where it has the most publications.  A
divergence score measures how far the surname's country distribution is
from that choice, and the assignment counts as reliable when the score is
inside a nearest-rank percentile of all surnames' scores.

Two scores are available:

``POINT_MASS`` (default)
    ``KL(delta_c* || p_s) = -ln p_s(c*)``, the divergence of the surname's
    empirical distribution ``p_s`` from a point mass at its modal country.
    Low means concentrated; reliable when at or below the percentile.

``GLOBAL_REFERENCE``
    ``KL(p_s || q)`` with ``q(c) = T(c) / T`` the corpus-wide country
    distribution.  High means informative; reliable when at or above the
    complementary percentile.

Natural logarithms throughout.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .assignment import Assignment, AssignmentSet, Method
from .errors import ConfigError

__all__ = [
    "KlMode",
    "KlConfig",
    "modal_country",
    "kl_point_mass",
    "kl_global",
    "global_baseline",
    "nearest_rank",
    "percentile_threshold",
    "assign_kl",
]


class KlMode(str, enum.Enum):
    POINT_MASS = "point-mass"
    GLOBAL_REFERENCE = "global"


@dataclass(frozen=True)
class KlConfig:
    percentile: float = 0.8
    mode: KlMode = KlMode.POINT_MASS

    def __post_init__(self):
        p = self.percentile
        if isinstance(p, bool) or not isinstance(p, (int, float, Fraction)):
            raise ConfigError(f"percentile must be a number, got {p!r}")
        if not 0 < p <= 1:
            raise ConfigError(f"percentile must lie in (0, 1], got {p}")
        object.__setattr__(self, "mode", KlMode(self.mode))


def modal_country(counts: Mapping[str, int]) -> tuple[str, float]:
    """Country with the largest count and its share of the surname's total.

    Ties go to the alphabetically first country.

    >>> modal_country({"AAA": 1, "BBB": 1})
    ('AAA', 0.5)
    """
    if not counts:
        raise ValueError("empty count vector")
    country, top = min(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return country, top / sum(counts.values())


def _values(counts):
    return list(counts.values()) if isinstance(counts, Mapping) else list(counts)


def kl_point_mass(counts) -> float:
    """``-ln(max share)``; zero exactly when only one country is present.

    ``counts`` is a mapping ``country -> count`` or a sequence of counts.
    """
    values = [v for v in _values(counts) if v > 0]
    if not values:
        raise ValueError("empty count vector")
    return math.log(sum(values) / max(values))


def kl_global(counts, baseline) -> float:
    """``sum_c p(c) ln(p(c) / q(c))`` over the surname's support.

    ``counts`` and ``baseline`` are either mappings keyed by country or
    aligned sequences.  ``counts`` may be unnormalized; ``baseline`` is a
    probability vector ``q``.  The support of ``counts`` must lie inside the
    support of ``baseline``.
    """
    if isinstance(counts, Mapping):
        pairs = [(n, baseline[c]) for c, n in counts.items() if n > 0]
    else:
        if len(counts) != len(baseline):
            raise ValueError("counts and baseline differ in length")
        pairs = [(n, q) for n, q in zip(counts, baseline) if n > 0]
    if not pairs:
        raise ValueError("empty count vector")
    total = sum(n for n, _ in pairs)
    d = 0.0
    for n, q in pairs:
        if q <= 0:
            raise ValueError("baseline has zero mass on the surname's support")
        p = n / total
        d += p * math.log(p / q)
    return max(d, 0.0)


def global_baseline(m) -> dict[str, float]:
    """Corpus-wide country distribution ``T(c) / T`` of a matrix."""
    total = m.grand_total
    return {c: t / total for c, t in m.country_totals.items()}


def _as_fraction(p) -> Fraction:
    # repr() recovers the decimal the caller wrote, so 0.7 * 10 ranks as 7, not 8
    return Fraction(repr(p)) if isinstance(p, float) else Fraction(p)


def nearest_rank(p, size: int) -> int:
    """1-based nearest rank ``ceil(p * size)``, clamped to ``[1, size]``."""
    rank = math.ceil(_as_fraction(p) * size)
    return min(max(rank, 1), size)


def percentile_threshold(scores: Sequence[float], p) -> float:
    """The ``ceil(p * M)``-th smallest of ``M`` scores (duplicates kept).

    >>> percentile_threshold(list(range(10)), 0.8)
    7.0
    """
    if len(scores) == 0:
        raise ConfigError("percentile of an empty score list")
    if not 0 < p <= 1:
        raise ConfigError(f"percentile must lie in (0, 1], got {p}")
    arr = np.asarray(scores, dtype=np.float64)
    k = nearest_rank(p, arr.size) - 1
    return float(np.partition(arr, k)[k])


def assign_kl(m, cfg: KlConfig | None = None) -> AssignmentSet:
    """Assign every surname in ``m`` to its modal country and flag reliability."""
    cfg = cfg or KlConfig()
    if len(m) == 0:
        raise ConfigError("cannot assign surnames from an empty matrix")

    surnames = sorted(m.counts)
    chosen = []
    scores = np.empty(len(surnames), dtype=np.float64)
    if cfg.mode is KlMode.POINT_MASS:
        for i, s in enumerate(surnames):
            row = m.counts[s]
            country, top = min(row.items(), key=lambda kv: (-kv[1], kv[0]))
            chosen.append(country)
            scores[i] = math.log(sum(row.values()) / top)
        threshold = percentile_threshold(scores, cfg.percentile)
        reliable = scores <= threshold
    else:
        baseline = global_baseline(m)
        for i, s in enumerate(surnames):
            row = m.counts[s]
            chosen.append(min(row.items(), key=lambda kv: (-kv[1], kv[0]))[0])
            scores[i] = kl_global(row, baseline)
        lower = 1 - _as_fraction(cfg.percentile)
        if lower == 0:
            threshold = float(scores.min())
        else:
            threshold = percentile_threshold(scores, lower)
        reliable = scores >= threshold

    out = [
        Assignment(s, c, float(score), bool(ok), Method.KL)
        for s, c, score, ok in zip(surnames, chosen, scores, reliable)
    ]
    config = {
        "method": Method.KL.value,
        "percentile": cfg.percentile,
        "mode": cfg.mode.value,
        "threshold": threshold,
    }
    return AssignmentSet(out, config)

"""Term weighting schemes: boolean, IDF, TF-IDF, BTF, and BTF-IDF.

BTF (boosted term frequency) multiplies each zone's occurrence count
by that zone's boost and sums the results, so a term in the title
counts far more than the same term buried in body text.  With a boost
profile of all ones BTF collapses to the raw term frequency and
BTF-IDF collapses to classical TF-IDF.

All functions are pure and all weights are plain 64-bit floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .html_zones import Zone


@dataclass(frozen=True)
class BoostProfile:
    """Zone multipliers. The defaults favor title and URL most heavily."""

    title: float = 18.0
    meta: float = 16.0
    h1: float = 14.0
    url: float = 18.0
    other: float = 1.0

    def __post_init__(self):
        for zone in Zone:
            if self.for_zone(zone) <= 0:
                raise ValueError(f"boost for {zone.value} must be positive")

    def for_zone(self, zone: Zone) -> float:
        return getattr(self, zone.value)


DEFAULT_PROFILE = BoostProfile()


@dataclass
class CollectionStats:
    """Document count and per-term document frequencies for one collection.

    df counts literal occurrences only, before any synonym expansion,
    so the statistics are independent of the thesaurus in use.
    """

    n: int
    df: dict[str, int]


def boolean_weight(tf: int) -> int:
    """1 if the term appears at all, else 0."""
    return 1 if tf > 0 else 0


def idf(n: int, df: int) -> float:
    """Inverse document frequency, log base 10 of n/df.

    Zero when the term is in every document.  df outside [1, n] is a
    caller bug and raises rather than returning a misleading number.
    """
    if n < 1:
        raise ValueError(f"collection size must be positive, got {n}")
    if not 1 <= df <= n:
        raise ValueError(f"df must be in [1, {n}], got {df}")
    return math.log10(n / df)


def tf_idf(tf, idf: float) -> float:
    return tf * idf


def btf(counts: dict[Zone, int], profile: BoostProfile) -> float:
    """Boosted term frequency: sum of zone count times zone multiplier."""
    return sum(counts.get(zone, 0) * profile.for_zone(zone) for zone in Zone)


def btf_idf(btf: float, idf: float) -> float:
    return btf * idf

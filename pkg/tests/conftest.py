"""Shared reference tables for the demo collection under fixtures/.

The demo collection holds one optimization-guide page (d001) with
hand-pinned zone counts plus 99 filler pages that realize an exact
document-frequency table.  The coarse tf/idf values below are the
rounded figures the expected weight tables were calculated from;
test tolerances absorb that rounding.
"""
from __future__ import annotations

from pathlib import Path

import pytest

from swvm import (
    DEFAULT_PROFILE,
    SynonymGroup,
    Thesaurus,
    Zone,
    btf,
    btf_idf,
    tf_idf,
    vector_from_groups,
)

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"

QUERY_MAIN = "optimize computer performance"
QUERY_SYNONYM = "improve PC speed"

# Zone counts of the guide page, in ascending order of final weight.
REFERENCE_ZONE_COUNTS = {
    "computer": {Zone.TITLE: 1, Zone.H1: 1, Zone.OTHER: 51},
    "microsoft": {Zone.OTHER: 11},
    "disk": {Zone.OTHER: 30},
    "check": {Zone.OTHER: 26},
    "windows": {Zone.META: 1, Zone.OTHER: 16},
    "error": {Zone.OTHER: 10},
    "performance": {Zone.META: 1, Zone.H1: 1, Zone.OTHER: 7},
    "optimize": {Zone.TITLE: 1, Zone.META: 1, Zone.H1: 1, Zone.URL: 1},
}

# Document frequencies realized by the 100-page demo collection.
REFERENCE_DF = {
    "computer": 98,
    "microsoft": 64,
    "disk": 81,
    "check": 76,
    "windows": 72,
    "error": 31,
    "performance": 48,
    "optimize": 3,
}

COLLECTION_SIZE = 100

# Rounded idf values the expected weight columns were computed with.
COARSE_IDF = {
    "computer": 0.008,
    "microsoft": 0.19,
    "disk": 0.09,
    "check": 0.12,
    "windows": 0.14,
    "error": 0.51,
    "performance": 0.32,
    "optimize": 1.52,
}

# Flat term frequencies used by the unboosted weight table.
COARSE_TF = {
    "computer": 52,
    "optimize": 1,
    "microsoft": 11,
    "windows": 16,
    "performance": 8,
    "disk": 30,
    "check": 26,
    "error": 10,
}

EXPECTED_BTF = {
    "computer": 83,
    "microsoft": 11,
    "disk": 30,
    "check": 26,
    "windows": 32,
    "error": 10,
    "performance": 37,
    "optimize": 66,
}

EXPECTED_BTF_IDF = {
    "computer": 0.66,
    "microsoft": 2.09,
    "disk": 2.70,
    "check": 3.12,
    "windows": 4.48,
    "error": 5.10,
    "performance": 11.84,
    "optimize": 100.32,
}

EXPECTED_TF_IDF = {
    "computer": 0.41,
    "optimize": 1.52,
    "microsoft": 2.09,
    "windows": 2.24,
    "performance": 2.56,
    "disk": 2.70,
    "check": 3.12,
    "error": 5.10,
}

SYNONYMS = {
    "computer": ["workstation", "pc", "processor"],
    "microsoft": [],
    "disk": ["hard-disk", "diskette"],
    "check": ["examine", "test", "try"],
    "windows": [],
    "error": ["fault", "mistake", "bug", "glitch"],
    "performance": ["execution", "efficiency", "speed"],
    "optimize": ["enhance", "improve", "boost"],
}


def reference_swvm_vector():
    """The guide page as a synonym-group vector over the coarse idf values."""
    groups = [
        SynonymGroup(
            term,
            [term, *SYNONYMS[term]],
            btf_idf(btf(REFERENCE_ZONE_COUNTS[term], DEFAULT_PROFILE), COARSE_IDF[term]),
        )
        for term in REFERENCE_ZONE_COUNTS
    ]
    return vector_from_groups("d001", "www.optimize.com", groups)


def reference_flat_vector():
    """The same page as a plain tf-idf vector without synonyms."""
    groups = [
        SynonymGroup(term, [term], tf_idf(COARSE_TF[term], COARSE_IDF[term]))
        for term in COARSE_TF
    ]
    return vector_from_groups("d001", "www.optimize.com", groups)


@pytest.fixture
def demo_thesaurus() -> Thesaurus:
    return Thesaurus({head: list(syns) for head, syns in SYNONYMS.items()})


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR

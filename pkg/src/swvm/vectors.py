"""Synonym-group document vectors, query vectors, and cosine scoring.

A document vector holds one group per distinct document term.  The
group carries the head term's weight and the head's thesaurus synonyms
as extra members, every member sharing that single weight.  The vector
norm squares each group weight exactly once, never once per member, so
attaching synonyms can only widen what a document matches, not change
its length.

Queries stay unexpanded: a query vector is nothing but raw token
counts.  Matching happens on the document side, through group
membership.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import IndexFileError
from .html_zones import ZonedTermCounts, tokenize
from .thesaurus import Thesaurus
from .weighting import BoostProfile, CollectionStats, btf, btf_idf, idf, tf_idf

BTF_IDF_SCHEME = "btf-idf"
TF_IDF_SCHEME = "tf-idf"
SCHEMES = (BTF_IDF_SCHEME, TF_IDF_SCHEME)

# A query vector is a plain mapping from token to its raw count in the
# query text.  No IDF, no synonym expansion.
QueryVector = dict[str, int]


@dataclass
class SynonymGroup:
    head: str
    members: list[str]  # head first, then its synonyms, all distinct
    weight: float


@dataclass
class DocumentVector:
    doc_id: str
    url: str
    groups: list[SynonymGroup]  # sorted by (weight, head) ascending
    norm: float


def vector_from_groups(doc_id: str, url: str, groups) -> DocumentVector:
    """Order groups canonically and cache the Euclidean norm."""
    ordered = sorted(groups, key=lambda g: (g.weight, g.head))
    norm = math.sqrt(sum(g.weight * g.weight for g in ordered))
    return DocumentVector(doc_id, url, ordered, norm)


def build_document_vector(
    counts: ZonedTermCounts,
    th: Thesaurus,
    stats: CollectionStats,
    profile: BoostProfile,
    scheme: str,
) -> DocumentVector:
    """Weight every term of one document and wrap it in synonym groups.

    Under "btf-idf" the weight is btf(zone counts) * idf; under
    "tf-idf" it is the raw frequency * idf, ignoring the profile.  With
    scheme "tf-idf" and an empty thesaurus the result is a classical
    VSM vector.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown weighting scheme {scheme!r}")
    groups = []
    for term, zone_counts in counts.terms.items():
        try:
            term_idf = idf(stats.n, stats.df[term])
        except KeyError:
            raise IndexFileError(
                f"collection statistics have no df entry for term {term!r}"
                f" (document {counts.doc_id})"
            ) from None
        if scheme == BTF_IDF_SCHEME:
            weight = btf_idf(btf(zone_counts, profile), term_idf)
        else:
            weight = tf_idf(sum(zone_counts.values()), term_idf)
        groups.append(SynonymGroup(term, [term, *th.synonyms(term)], weight))
    return vector_from_groups(counts.doc_id, counts.url, groups)


def build_query_vector(query: str) -> QueryVector:
    """Tokenize a query; each distinct token's weight is its count."""
    vector: QueryVector = {}
    for token in tokenize(query):
        vector[token] = vector.get(token, 0) + 1
    return vector


def query_norm(q: QueryVector) -> float:
    return math.sqrt(sum(w * w for w in q.values()))


def dot(d: DocumentVector, q: QueryVector) -> float:
    """Sum of group weight * query weight over every matching pair.

    A query term appearing in several groups contributes to each of
    them; several query terms inside one group each contribute.
    """
    return sum(
        g.weight * q[t] for g in d.groups for t in g.members if t in q
    )


def cosine(d: DocumentVector, q: QueryVector) -> float:
    """Cosine similarity between a document vector and a query.

    Zero when either side has zero norm.  Because synonyms share their
    group's weight without fattening the norm, a query hitting several
    members of one group could push the raw ratio past 1, so the result
    is clamped to the documented [0, 1] range.
    """
    qn = query_norm(q)
    if d.norm == 0.0 or qn == 0.0:
        return 0.0
    return min(dot(d, q) / (d.norm * qn), 1.0)

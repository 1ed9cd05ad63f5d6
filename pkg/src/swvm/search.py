"""Query execution, ranking, weight explanations, and scheme comparison."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexFileError, SearchError
from .html_zones import Zone
from .index_store import Index
from .vectors import (
    TF_IDF_SCHEME,
    build_query_vector,
    cosine,
)
from .weighting import idf


@dataclass(frozen=True)
class RankedResult:
    doc_id: str
    url: str
    score: float


@dataclass
class ExplanationRow:
    head: str
    synonyms: list[str]
    zone_counts: dict[Zone, int] | None  # None when the index was loaded from disk
    btf: float | None
    btf_text: str
    idf: float
    weight: float


@dataclass
class WeightExplanation:
    doc_id: str
    url: str
    norm: float
    scheme: str
    rows: list[ExplanationRow]  # ascending by final weight, like the vector


def search(idx: Index, query: str, k: int) -> list[RankedResult]:
    """Rank the top k documents for a query by cosine similarity.

    Candidates come from the inverted map: any document sharing at
    least one token (head or synonym) with the query.  Documents
    scoring zero are dropped.  Ties are broken by ascending doc id so
    results are fully deterministic.
    """
    q = build_query_vector(query)
    if not q:
        return []
    candidates = {doc_id for t in q for doc_id, _ in idx.inverted.get(t, ())}
    scored = []
    for doc_id in candidates:
        vec = idx.documents[doc_id]
        score = cosine(vec, q)
        if score > 0.0:
            scored.append(RankedResult(doc_id, vec.url, score))
    scored.sort(key=lambda r: (-r.score, r.doc_id))
    return scored[:k]


def _breakdown(contributions: list[float], total: float) -> str:
    pieces = [f"{c:g}" for c in contributions]
    if len(pieces) > 1:
        return "+".join(pieces) + f"={total:g}"
    return f"{total:g}"


def explain(idx: Index, doc_id: str) -> WeightExplanation:
    """Break a document's stored weights down into their factors.

    Each row re-derives the stored weight from its parts, as a
    consistency check; a disagreement beyond 1e-9 relative means the
    index is corrupt.  Per-zone counts are only available on an index
    that was built in this process; an index loaded from disk keeps the
    weights and their btf/idf split but not the raw counts.
    """
    if doc_id not in idx.documents:
        raise SearchError(f"unknown document id {doc_id!r}")
    vec = idx.documents[doc_id]
    counts = (idx.zone_counts or {}).get(doc_id)

    rows = []
    for group in vec.groups:
        term_idf = idf(idx.stats.n, idx.stats.df[group.head])
        if counts is not None:
            zone_counts = counts.terms[group.head]
            boost = (
                (lambda zone: 1.0)
                if idx.scheme == TF_IDF_SCHEME
                else idx.profile.for_zone
            )
            parts = [
                zone_counts[zone] * boost(zone)
                for zone in Zone
                if zone_counts.get(zone, 0)
            ]
            btf_value = sum(parts)
            recomputed = btf_value * term_idf
        elif term_idf > 0.0:
            zone_counts = None
            btf_value = group.weight / term_idf
            recomputed = btf_value * term_idf
        else:
            zone_counts = None
            btf_value = None
            recomputed = 0.0
        if abs(recomputed - group.weight) > 1e-9 * max(abs(recomputed), abs(group.weight)):
            raise IndexFileError(
                f"stored weight for {group.head!r} in {doc_id!r} does not"
                f" reproduce from its parts"
            )
        text = _breakdown(parts, btf_value) if counts is not None else (
            f"{btf_value:g}" if btf_value is not None else "-"
        )
        rows.append(
            ExplanationRow(
                head=group.head,
                synonyms=group.members[1:],
                zone_counts=zone_counts,
                btf=btf_value,
                btf_text=text,
                idf=term_idf,
                weight=group.weight,
            )
        )
    return WeightExplanation(doc_id, vec.url, vec.norm, idx.scheme, rows)


def compare(
    idx_a: Index, idx_b: Index, query: str, k: int
) -> tuple[list[RankedResult], list[RankedResult]]:
    """Run one query against two indexes of the same collection.

    Refuses to compare indexes whose document sets differ, since the
    side-by-side scores would not be about the same corpus.
    """
    if idx_a.stats.n != idx_b.stats.n or set(idx_a.documents) != set(idx_b.documents):
        raise SearchError("indexes cover different collections")
    return search(idx_a, query, k), search(idx_b, query, k)

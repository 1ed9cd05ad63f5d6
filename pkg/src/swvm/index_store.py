"""Two-pass collection indexing and flat-file index persistence.

The on-disk format is UTF-8, line-oriented, tab-separated::

    SWVMIDX 1
    N <doc count>
    SCHEME <btf-idf|tf-idf>
    BOOST title=<v> meta=<v> h1=<v> url=<v> other=<v>
    DOC <doc_id> <url> <norm>          one per document
    GRP <doc_id> <ordinal> <head> <weight> <member,member,...>
    DF <term> <count>                  one per term

Sections appear in that order and records are sorted within each
section (group records by document id, then by ordinal as a number).
Floats are written with repr(), so parsing them back yields the
identical 64-bit value and saving the same index twice is
byte-identical.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DocumentReadError, IndexFileError, ManifestError
from .html_zones import ZonedTermCounts, extract_zones
from .ingest import ManifestEntry, read_document
from .thesaurus import Thesaurus
from .vectors import (
    SCHEMES,
    BTF_IDF_SCHEME,
    DocumentVector,
    SynonymGroup,
    build_document_vector,
)
from .weighting import DEFAULT_PROFILE, BoostProfile, CollectionStats

_MAGIC = "SWVMIDX"
_VERSION = "1"
_BOOST_KEYS = ("title", "meta", "h1", "url", "other")


@dataclass
class Index:
    """Everything needed to answer queries over one collection.

    ``inverted`` maps every member token (heads and synonyms alike) to
    the sorted (doc_id, group ordinal) postings that contain it.
    ``zone_counts`` is a build-time convenience kept only in memory; it
    is not persisted and is ignored by equality comparisons.
    """

    stats: CollectionStats
    scheme: str
    profile: BoostProfile
    documents: dict[str, DocumentVector]
    inverted: dict[str, list[tuple[str, int]]]
    zone_counts: dict[str, ZonedTermCounts] | None = field(
        default=None, compare=False, repr=False
    )


def build_index(
    entries: list[ManifestEntry],
    th: Thesaurus,
    profile: BoostProfile = DEFAULT_PROFILE,
    scheme: str = BTF_IDF_SCHEME,
) -> tuple[Index, list[str]]:
    """Index a collection in two passes: df statistics, then vectors.

    A document that cannot be read is skipped; the collection size and
    every df statistic exclude it.  Returns the index together with one
    human-readable message per skipped document.
    """
    skipped: list[str] = []
    parsed: dict[str, ZonedTermCounts] = {}
    seen: set[str] = set()
    for entry in entries:
        if entry.doc_id in seen:
            raise ManifestError(f"duplicate doc id {entry.doc_id!r} in manifest entries")
        seen.add(entry.doc_id)
        try:
            doc = read_document(entry)
        except DocumentReadError as exc:
            skipped.append(str(exc))
            continue
        parsed[entry.doc_id] = extract_zones(doc)

    df: dict[str, int] = {}
    for counts in parsed.values():
        for term in counts.terms:
            df[term] = df.get(term, 0) + 1
    stats = CollectionStats(len(parsed), df)

    documents: dict[str, DocumentVector] = {}
    inverted: dict[str, list[tuple[str, int]]] = {}
    for doc_id, counts in parsed.items():
        vector = build_document_vector(counts, th, stats, profile, scheme)
        documents[doc_id] = vector
        for ordinal, group in enumerate(vector.groups):
            for token in group.members:
                inverted.setdefault(token, []).append((doc_id, ordinal))
    for postings in inverted.values():
        postings.sort()

    return Index(stats, scheme, profile, documents, inverted, parsed), skipped


def _fmt(value: float) -> str:
    return repr(float(value))


def save_index(idx: Index, path) -> None:
    """Write an index in the flat-file format above (byte-deterministic)."""
    if idx.scheme not in SCHEMES:
        raise ValueError(f"unknown weighting scheme {idx.scheme!r}")
    lines = [
        f"{_MAGIC}\t{_VERSION}",
        f"N\t{idx.stats.n}",
        f"SCHEME\t{idx.scheme}",
        "BOOST\t" + "\t".join(
            f"{key}={_fmt(getattr(idx.profile, key))}" for key in _BOOST_KEYS
        ),
    ]
    for doc_id in sorted(idx.documents):
        vec = idx.documents[doc_id]
        lines.append(f"DOC\t{doc_id}\t{vec.url}\t{_fmt(vec.norm)}")
    for doc_id in sorted(idx.documents):
        for ordinal, group in enumerate(idx.documents[doc_id].groups):
            members = ",".join(group.members)
            lines.append(
                f"GRP\t{doc_id}\t{ordinal}\t{group.head}\t{_fmt(group.weight)}\t{members}"
            )
    for term in sorted(idx.stats.df):
        lines.append(f"DF\t{term}\t{idx.stats.df[term]}")
    data = ("\n".join(lines) + "\n").encode("utf-8")
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise IndexFileError(f"cannot write index {path}: {exc.strerror or exc}")


def _parse_float(text, what, lineno, path):
    try:
        value = float(text)
    except ValueError:
        value = math.nan
    if not math.isfinite(value) or value < 0:
        raise IndexFileError(f"{path}: line {lineno}: bad {what} {text!r}")
    return value


def _parse_count(text, what, lineno, path):
    try:
        value = int(text)
    except ValueError:
        raise IndexFileError(f"{path}: line {lineno}: bad {what} {text!r}")
    if value < 0:
        raise IndexFileError(f"{path}: line {lineno}: bad {what} {text!r}")
    return value


def load_index(path) -> Index:
    """Read an index file back, verifying its structural invariants.

    Loading what save_index wrote reproduces the index exactly, weights
    and norms bit-equal.  The inverted map is rebuilt from the group
    records.  Any inconsistency (wrong version, malformed record, norm
    that disagrees with its group weights, df table that disagrees with
    the stored groups) raises IndexFileError with a line number where
    one applies.
    """
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise IndexFileError(f"cannot read index {path}: {exc.strerror or exc}")
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IndexFileError(f"index {path} is not valid UTF-8: {exc}")

    lines = text.splitlines()
    if not lines:
        raise IndexFileError(f"{path}: empty file")
    magic = lines[0].split()
    if not magic or magic[0] != _MAGIC:
        raise IndexFileError(f"{path}: not an index file (bad magic line)")
    if magic[1:] != [_VERSION]:
        found = " ".join(magic[1:]) or "(missing)"
        raise IndexFileError(f"{path}: unsupported index version {found}")
    if len(lines) < 4:
        raise IndexFileError(f"{path}: truncated header")

    fields = lines[1].split("\t")
    if len(fields) != 2 or fields[0] != "N":
        raise IndexFileError(f"{path}: line 2: expected N record")
    n = _parse_count(fields[1], "document count", 2, path)

    fields = lines[2].split("\t")
    if len(fields) != 2 or fields[0] != "SCHEME" or fields[1] not in SCHEMES:
        raise IndexFileError(f"{path}: line 3: expected SCHEME btf-idf or tf-idf")
    scheme = fields[1]

    fields = lines[3].split("\t")
    if len(fields) != 6 or fields[0] != "BOOST":
        raise IndexFileError(f"{path}: line 4: expected BOOST record with 5 zones")
    boosts = {}
    for key, part in zip(_BOOST_KEYS, fields[1:]):
        name, sep, value = part.partition("=")
        if name != key or not sep:
            raise IndexFileError(f"{path}: line 4: expected {key}=<value>, got {part!r}")
        boosts[key] = _parse_float(value, f"{key} boost", 4, path)
    try:
        profile = BoostProfile(**boosts)
    except ValueError as exc:
        raise IndexFileError(f"{path}: line 4: {exc}")

    section_rank = {"DOC": 0, "GRP": 1, "DF": 2}
    rank = 0
    doc_meta: dict[str, tuple[str, float]] = {}
    doc_groups: dict[str, dict[int, SynonymGroup]] = {}
    df: dict[str, int] = {}

    for lineno, line in enumerate(lines[4:], start=5):
        fields = line.split("\t")
        kind = fields[0]
        if kind not in section_rank:
            raise IndexFileError(f"{path}: line {lineno}: unknown record {kind!r}")
        if section_rank[kind] < rank:
            raise IndexFileError(f"{path}: line {lineno}: {kind} record out of order")
        rank = section_rank[kind]

        if kind == "DOC":
            if len(fields) != 4:
                raise IndexFileError(f"{path}: line {lineno}: malformed DOC record")
            _, doc_id, url, norm_text = fields
            if not doc_id or not url:
                raise IndexFileError(f"{path}: line {lineno}: malformed DOC record")
            if doc_id in doc_meta:
                raise IndexFileError(f"{path}: line {lineno}: duplicate DOC {doc_id!r}")
            doc_meta[doc_id] = (url, _parse_float(norm_text, "norm", lineno, path))
        elif kind == "GRP":
            if len(fields) != 6:
                raise IndexFileError(f"{path}: line {lineno}: malformed GRP record")
            _, doc_id, ordinal_text, head, weight_text, members_text = fields
            if doc_id not in doc_meta:
                raise IndexFileError(
                    f"{path}: line {lineno}: GRP for unknown document {doc_id!r}"
                )
            ordinal = _parse_count(ordinal_text, "group ordinal", lineno, path)
            weight = _parse_float(weight_text, "weight", lineno, path)
            members = members_text.split(",")
            if not head or any(not m for m in members) or members[0] != head:
                raise IndexFileError(
                    f"{path}: line {lineno}: group members must be non-empty"
                    f" and start with the head term"
                )
            if len(set(members)) != len(members):
                raise IndexFileError(f"{path}: line {lineno}: duplicate group member")
            per_doc = doc_groups.setdefault(doc_id, {})
            if ordinal in per_doc:
                raise IndexFileError(
                    f"{path}: line {lineno}: duplicate ordinal {ordinal}"
                    f" for document {doc_id!r}"
                )
            per_doc[ordinal] = SynonymGroup(head, members, weight)
        else:
            if len(fields) != 3:
                raise IndexFileError(f"{path}: line {lineno}: malformed DF record")
            _, term, count_text = fields
            if not term:
                raise IndexFileError(f"{path}: line {lineno}: malformed DF record")
            if term in df:
                raise IndexFileError(f"{path}: line {lineno}: duplicate DF {term!r}")
            df[term] = _parse_count(count_text, "df", lineno, path)

    if n != len(doc_meta):
        raise IndexFileError(
            f"{path}: document count N is {n} but file has {len(doc_meta)} DOC records"
        )
    for term, count in df.items():
        if not 1 <= count <= n:
            raise IndexFileError(f"{path}: df for {term!r} is {count}, outside [1, {n}]")

    documents: dict[str, DocumentVector] = {}
    derived_df: dict[str, int] = {}
    for doc_id, (url, norm) in doc_meta.items():
        per_doc = doc_groups.get(doc_id, {})
        groups = []
        for ordinal in range(len(per_doc)):
            if ordinal not in per_doc:
                raise IndexFileError(
                    f"{path}: document {doc_id!r} has a gap in group ordinals"
                )
            groups.append(per_doc[ordinal])
        heads = {g.head for g in groups}
        if len(heads) != len(groups):
            raise IndexFileError(f"{path}: document {doc_id!r} repeats a group head")
        for prev, cur in zip(groups, groups[1:]):
            if (cur.weight, cur.head) < (prev.weight, prev.head):
                raise IndexFileError(
                    f"{path}: document {doc_id!r} groups are not sorted by weight"
                )
        norm_sq = sum(g.weight * g.weight for g in groups)
        if abs(norm * norm - norm_sq) > 1e-9 * max(norm * norm, norm_sq):
            raise IndexFileError(
                f"{path}: document {doc_id!r} norm disagrees with its group weights"
            )
        for head in heads:
            derived_df[head] = derived_df.get(head, 0) + 1
        documents[doc_id] = DocumentVector(doc_id, url, groups, norm)

    if derived_df != df:
        raise IndexFileError(f"{path}: DF table disagrees with the stored groups")

    inverted: dict[str, list[tuple[str, int]]] = {}
    for doc_id, vec in documents.items():
        for ordinal, group in enumerate(vec.groups):
            for token in group.members:
                inverted.setdefault(token, []).append((doc_id, ordinal))
    for postings in inverted.values():
        postings.sort()

    return Index(CollectionStats(n, df), scheme, profile, documents, inverted)

"""Collection manifests and raw document loading.

A collection is described by a manifest: a UTF-8 text file with one
document per line, fields separated by tabs::

    doc_id<TAB>url<TAB>path

Blank lines and lines starting with ``#`` are skipped.  Paths are
resolved relative to the manifest file's directory.  The URL is kept
as metadata because URL terms participate in weighting.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import DocumentReadError, ManifestError


@dataclass(frozen=True)
class ManifestEntry:
    doc_id: str
    url: str
    path: Path


@dataclass(frozen=True)
class RawDocument:
    """A manifest entry together with its decoded body text.

    Decoding never fails: the bytes are interpreted as UTF-8 and any
    invalid sequence is replaced with U+FFFD.
    """

    entry: ManifestEntry
    body: str


def load_manifest(path) -> list[ManifestEntry]:
    """Parse a manifest file into an ordered list of entries.

    Raises ManifestError for a missing or undecodable file, a line with
    the wrong number of fields, an empty field, or a duplicate doc id.
    Every complaint names the offending line number.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc.strerror or exc}")
    except UnicodeDecodeError as exc:
        raise ManifestError(f"manifest {path} is not valid UTF-8: {exc}")

    base = path.parent
    entries: list[ManifestEntry] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = raw.rstrip("\n").split("\t")
        if len(fields) != 3:
            raise ManifestError(
                f"{path}: line {lineno}: expected 3 tab-separated fields, got {len(fields)}"
            )
        doc_id, url, rel = (f.strip() for f in fields)
        if not doc_id or not url or not rel:
            raise ManifestError(f"{path}: line {lineno}: empty field")
        if doc_id in seen:
            raise ManifestError(
                f"{path}: line {lineno}: duplicate doc id {doc_id!r}"
                f" (first used on line {seen[doc_id]})"
            )
        seen[doc_id] = lineno
        entries.append(ManifestEntry(doc_id, url, base / rel))
    return entries


def read_document(entry: ManifestEntry) -> RawDocument:
    """Read one document's bytes and decode them as UTF-8 with replacement."""
    try:
        data = Path(entry.path).read_bytes()
    except OSError as exc:
        raise DocumentReadError(entry.doc_id, entry.path, exc.strerror or str(exc))
    return RawDocument(entry, data.decode("utf-8", errors="replace"))

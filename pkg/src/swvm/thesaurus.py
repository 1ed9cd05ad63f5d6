"""Thesaurus loading and synonym lookup.

The thesaurus file format is one entry per line::

    head: synonym1, synonym2, ...

``#`` lines are comments, blank lines are ignored.  Heads and synonyms
are normalized through the tokenizer and must each be a single token.
Lookup is directional and exactly as stored: no symmetric or transitive
closure is ever applied, because expanding it would silently change
which terms share a group.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import ThesaurusError
from .html_zones import tokenize


@dataclass
class Thesaurus:
    entries: dict[str, list[str]] = field(default_factory=dict)

    def synonyms(self, term: str) -> list[str]:
        """Stored synonyms for a head term, or [] for anything else.

        The result never contains the queried term itself.
        """
        return self.entries.get(term, [])


def _single_token(text, what, lineno, path):
    tokens = tokenize(text)
    if len(tokens) != 1:
        raise ThesaurusError(
            f"{path}: line {lineno}: {what} {text.strip()!r} is not a single token"
        )
    return tokens[0]


def load_thesaurus(path) -> Thesaurus:
    """Parse a thesaurus file.

    Rejects lines without a colon, multi-token heads or synonyms, and
    repeated head lines.  A synonym equal to its own head, or repeated
    within one list, is dropped rather than rejected.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ThesaurusError(f"cannot read thesaurus {path}: {exc.strerror or exc}")
    except UnicodeDecodeError as exc:
        raise ThesaurusError(f"thesaurus {path} is not valid UTF-8: {exc}")

    entries: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head_part, sep, rest = line.partition(":")
        if not sep:
            raise ThesaurusError(f"{path}: line {lineno}: missing ':' separator")
        head = _single_token(head_part, "head", lineno, path)
        if head in entries:
            raise ThesaurusError(f"{path}: line {lineno}: duplicate head {head!r}")
        synonyms: list[str] = []
        for piece in rest.split(","):
            if not piece.strip():
                continue
            token = _single_token(piece, "synonym", lineno, path)
            if token != head and token not in synonyms:
                synonyms.append(token)
        entries[head] = synonyms
    return Thesaurus(entries)

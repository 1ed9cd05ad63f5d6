"""HTML parsing, tokenization, and per-zone term counting.

Every token occurrence in a page is attributed to exactly one zone:
the document title, meta keyword/description content, level-one
headings, the page URL, or anything else.  Downstream weighting boosts
each zone differently, so the counts are kept separate per zone.

The parser is deliberately tag-soup tolerant.  Malformed markup never
raises; at worst text ends up in the Other zone.  Unclosed elements
run to the end of the input.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from html.parser import HTMLParser

from .ingest import RawDocument


class Zone(enum.Enum):
    TITLE = "title"
    META = "meta"
    H1 = "h1"
    URL = "url"
    OTHER = "other"


@dataclass
class ZonedTermCounts:
    """Per-zone occurrence counts for every term of one document.

    Terms are tokenizer-normalized.  A term only appears in the mapping
    if it occurs at least once somewhere; zones it does not occur in
    are simply absent from its inner mapping.
    """

    doc_id: str
    url: str
    terms: dict[str, dict[Zone, int]] = field(default_factory=dict)


# A token is a maximal run of letters/digits, possibly joined by interior
# hyphens.  Underscores separate tokens; leading/trailing hyphens never
# survive because the pattern requires word characters on both sides.
_TOKEN_RE = re.compile(r"[^\W_]+(?:-+[^\W_]+)*")

_URL_SCHEMES = {"http", "https"}
_URL_HOST_SUFFIXES = {"com", "org", "net", "edu", "gov"}
_URL_EXTENSIONS = {"html", "htm", "aspx", "php", "jsp"}


def tokenize(text: str) -> list[str]:
    """Split text into lowercase tokens.

    Tokens are maximal runs of Unicode letters and digits; interior
    hyphens are preserved (so "hard-disk" is one token) while every
    other character, including apostrophes and underscores, separates
    tokens.
    """
    return _TOKEN_RE.findall(text.lower())


def url_tokens(url: str) -> list[str]:
    """Extract the content-bearing tokens of a URL, host part first.

    Noise tokens are dropped: the scheme, the ``www`` label, a trailing
    top-level-domain or two-letter country label on the host, and the
    common dynamic/static page extensions (html, htm, aspx, php, jsp).
    """
    if not url:
        return []
    rest = url.split("://", 1)[-1]
    host, _, path = rest.partition("/")
    host = host.partition(":")[0]  # ignore a port, it is not a label

    labels = tokenize(host)
    if labels:
        last = labels[-1]
        if last in _URL_HOST_SUFFIXES or (len(last) == 2 and last.isalpha()):
            labels = labels[:-1]

    drop = _URL_SCHEMES | {"www"}
    tokens = [t for t in labels if t not in drop]
    tokens += [t for t in tokenize(path) if t not in drop | _URL_EXTENSIONS]
    return tokens


class _ZoneCollector(HTMLParser):
    """Accumulates text chunks per zone while walking tag soup.

    Text inside <script>/<style> and comments is discarded.  Markup
    nested in an <h1> keeps crediting descendant text to the heading
    zone; <title> content arrives as plain text because the underlying
    parser treats it as RCDATA.  Each text chunk is tokenized on its
    own, so tag boundaries act as token separators.
    """

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self._skip = 0
        self._title = 0
        self._h1 = 0
        self.chunks: list[tuple[Zone, str]] = []

    def handle_starttag(self, tag, attrs):
        if tag in ("script", "style"):
            self._skip += 1
        elif tag == "title":
            self._title += 1
        elif tag == "h1":
            self._h1 += 1
        elif tag == "meta":
            kv = {k: v for k, v in attrs if v is not None}
            if kv.get("name", "").lower() in ("keywords", "description"):
                content = kv.get("content")
                if content:
                    self.chunks.append((Zone.META, content))

    def handle_endtag(self, tag):
        if tag in ("script", "style") and self._skip:
            self._skip -= 1
        elif tag == "title" and self._title:
            self._title -= 1
        elif tag == "h1" and self._h1:
            self._h1 -= 1

    def handle_data(self, data):
        if self._skip:
            return
        if self._title:
            zone = Zone.TITLE
        elif self._h1:
            zone = Zone.H1
        else:
            zone = Zone.OTHER
        self.chunks.append((zone, data))


def extract_zones(doc: RawDocument) -> ZonedTermCounts:
    """Parse one document and count its terms per zone.

    URL-zone counts come from the manifest URL, not the markup.  This
    never raises on bad HTML.
    """
    collector = _ZoneCollector()
    collector.feed(doc.body)
    collector.close()

    counts = ZonedTermCounts(doc.entry.doc_id, doc.entry.url)
    for zone, chunk in collector.chunks:
        for token in tokenize(chunk):
            per_zone = counts.terms.setdefault(token, {})
            per_zone[zone] = per_zone.get(zone, 0) + 1
    for token in url_tokens(doc.entry.url):
        per_zone = counts.terms.setdefault(token, {})
        per_zone[Zone.URL] = per_zone.get(Zone.URL, 0) + 1
    return counts

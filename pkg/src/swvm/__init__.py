"""Synonym-group vector search over HTML collections.

Documents are parsed into per-zone term counts (title, meta, h1, URL,
other), weighted with a zone-boosted TF-IDF variant, and stored as
synonym-group vectors: every distinct term becomes a group whose
thesaurus synonyms share the head term's weight.  Queries stay plain
token-count vectors and match through group membership, so a page about
"optimize" is found by "improve" without touching the query.

A classical TF-IDF setup is available as a baseline scheme, and the
whole pipeline is reachable from the ``swvm`` command line tool.
"""
from .errors import (
    DocumentReadError,
    IndexFileError,
    ManifestError,
    SearchError,
    SwvmError,
    ThesaurusError,
)
from .html_zones import Zone, ZonedTermCounts, extract_zones, tokenize, url_tokens
from .index_store import Index, build_index, load_index, save_index
from .ingest import ManifestEntry, RawDocument, load_manifest, read_document
from .search import RankedResult, WeightExplanation, compare, explain, search
from .thesaurus import Thesaurus, load_thesaurus
from .vectors import (
    BTF_IDF_SCHEME,
    TF_IDF_SCHEME,
    DocumentVector,
    QueryVector,
    SynonymGroup,
    build_document_vector,
    build_query_vector,
    cosine,
    dot,
    vector_from_groups,
)
from .weighting import (
    DEFAULT_PROFILE,
    BoostProfile,
    CollectionStats,
    boolean_weight,
    btf,
    btf_idf,
    idf,
    tf_idf,
)

__all__ = [
    "BTF_IDF_SCHEME",
    "TF_IDF_SCHEME",
    "DEFAULT_PROFILE",
    "BoostProfile",
    "CollectionStats",
    "DocumentReadError",
    "DocumentVector",
    "Index",
    "IndexFileError",
    "ManifestEntry",
    "ManifestError",
    "QueryVector",
    "RankedResult",
    "RawDocument",
    "SearchError",
    "SwvmError",
    "SynonymGroup",
    "Thesaurus",
    "ThesaurusError",
    "WeightExplanation",
    "Zone",
    "ZonedTermCounts",
    "boolean_weight",
    "btf",
    "btf_idf",
    "build_document_vector",
    "build_index",
    "build_query_vector",
    "compare",
    "cosine",
    "dot",
    "explain",
    "extract_zones",
    "idf",
    "load_index",
    "load_manifest",
    "load_thesaurus",
    "read_document",
    "save_index",
    "search",
    "tf_idf",
    "tokenize",
    "url_tokens",
    "vector_from_groups",
]

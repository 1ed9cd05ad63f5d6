"""Exception types shared across the package."""


class SwvmError(Exception):
    """Base class for all errors raised by this package."""


class ManifestError(SwvmError):
    """A collection manifest is missing, unreadable, or malformed."""


class DocumentReadError(SwvmError):
    """A document listed in the manifest could not be read."""

    def __init__(self, doc_id, path, reason):
        super().__init__(f"{doc_id}: cannot read {path}: {reason}")
        self.doc_id = doc_id
        self.path = path


class ThesaurusError(SwvmError):
    """A thesaurus file is missing, unreadable, or malformed."""


class IndexFileError(SwvmError):
    """An index file cannot be read or written, or its contents are
    inconsistent (bad version, malformed record, violated invariant)."""


class SearchError(SwvmError):
    """A query-time request that cannot be answered, such as asking to
    explain a document id the index does not contain."""

"""Exception types shared across the package."""


class HbgError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpec(HbgError):
    """A chord-index specification failed validation.

    Carries the full validation report when one was produced.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class LabelOutOfRange(HbgError):
    """A vertex label is outside 1..order."""


class RootOutOfRange(HbgError):
    """A traversal root is outside 1..2b."""


class MalformedGraph(HbgError):
    """A graph value violates its structural invariants."""


class DegenerateChords(HbgError):
    """A chord tuple whose residues collide; no valid graph exists at any order."""


class InvalidTask(HbgError):
    """A search task violates its invariants."""


class InvalidRange(HbgError):
    """An order range is malformed (odd endpoints, negative span, ...)."""


class VerificationFailed(HbgError):
    """A stored or submitted witness does not achieve its claimed girth."""


class CorruptStore(HbgError):
    """A catalog file contains unreadable or non-verifying records."""


class ParseError(HbgError):
    """A reference list file could not be parsed."""

    def __init__(self, message, line_no=None):
        super().__init__(message)
        self.line_no = line_no


class OddOrderRejected(ParseError):
    """A reference list contains an odd order; these graphs have even order."""


class UnsupportedFormat(HbgError):
    """An unknown export format name."""


class OutOfTable(HbgError):
    """A girth outside the embedded reference-bounds table."""

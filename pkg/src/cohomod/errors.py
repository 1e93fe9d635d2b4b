# src/cohomod/errors.py

"""
Exception hierarchy for cohomod.

Library code raises these; the tool registry and the command line translate
them into exit codes (``exit_code``) and error documents.
"""

EXIT_OK = 0
EXIT_INCOMPLETE = 2
EXIT_PARSE_ERROR = 64
EXIT_SEMANTIC_ERROR = 65


class CohomodError(Exception):
    """Base class for every error raised by the engine."""

    exit_code: int = EXIT_SEMANTIC_ERROR


class InputFormatError(CohomodError):
    """Malformed JSON or a document that violates one of the file formats."""

    exit_code = EXIT_PARSE_ERROR


class SemanticInputError(CohomodError, ValueError):
    """Well-formed input that does not describe a valid mathematical object."""


class NotAPGroupError(SemanticInputError):
    pass


class DimensionMismatchError(SemanticInputError):
    pass


class GroupMismatchError(SemanticInputError):
    pass


class NotHSOPError(SemanticInputError):
    """The given elements do not form a homogeneous system of parameters."""


class InadmissibleTypeError(SemanticInputError):
    """A degree sequence is not admissible (steps down by more than one, or up)."""


class ProvenanceError(SemanticInputError):
    """A group-cohomology-only rule was applied to an arbitrary ring."""


class TheoremInapplicableError(SemanticInputError):
    """Hypotheses of the completion criterion fail (rank one, a degree below two)."""


class ResolutionTooShortError(CohomodError):
    """A resolution or extraction state does not reach the requested degree."""


class CertificationError(CohomodError):
    """An operation that requires certified input received bounded input."""


class NoSolutionError(CohomodError):
    """A linear system for a parameter with prescribed restrictions is inconsistent."""


class CapExceededError(CohomodError):
    """A configured cap (order, degree, dimension, bound) was reached."""

    exit_code = EXIT_INCOMPLETE


class BoundTooSmallError(CapExceededError):
    """The requested degree bound is below the stopping bound the theory demands."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required

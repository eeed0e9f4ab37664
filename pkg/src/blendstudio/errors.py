"""Exception hierarchy shared by every module.

Each error carries a stable machine-readable ``code`` that the HTTP layer
maps onto ApiError payloads. The full set is documented in docs/errors.md.
"""

from __future__ import annotations


class BlendError(Exception):
    """Base class; ``code`` is the wire-level identifier."""

    code = "internal_error"
    http_status = 500

    def __init__(self, message: str = "", *, detail: str | None = None):
        super().__init__(message or self.__doc__ or self.code)
        self.detail = detail


# --- expression ---------------------------------------------------------

class EmptyExpression(BlendError):
    code = "empty_expression"
    http_status = 400


class TaggerUnavailable(BlendError):
    code = "tagger_unavailable"
    http_status = 502


class IndexOutOfRange(BlendError):
    code = "index_out_of_range"
    http_status = 400


# --- knowledge ----------------------------------------------------------

class KnowledgeUnavailable(BlendError):
    code = "knowledge_unavailable"
    http_status = 502


class RateLimited(KnowledgeUnavailable):
    code = "rate_limited"
    http_status = 502

    def __init__(self, message: str = "", *, retry_after: float | None = None):
        super().__init__(message)
        self.retry_after = retry_after


# --- oracle -------------------------------------------------------------

class MissingBinding(BlendError):
    code = "missing_binding"
    http_status = 400

    def __init__(self, name: str):
        super().__init__(f"template placeholder has no binding: {name!r}")
        self.name = name


class OracleUnavailable(BlendError):
    code = "oracle_unavailable"
    http_status = 502


class InvalidOracleResponse(BlendError):
    code = "invalid_oracle_response"
    http_status = 502

    def __init__(self, message: str, *, last_text: str = "", attempts: int = 0):
        super().__init__(message)
        self.last_text = last_text
        self.attempts = attempts


class ParseFailure(BlendError):
    code = "parse_failure"
    http_status = 502


class SchemaMismatch(BlendError):
    code = "schema_mismatch"
    http_status = 502


class ImageProviderUnavailable(BlendError):
    code = "image_provider_unavailable"
    http_status = 502


class ContentRejected(BlendError):
    """Provider policy refusal, surfaced distinctly from transport failures."""

    code = "content_rejected"
    http_status = 502


# --- mapping ------------------------------------------------------------

class CandidateValidationFailed(BlendError):
    code = "candidate_validation_failed"
    http_status = 502

    def __init__(self, message: str, *, partial: list | None = None):
        super().__init__(message)
        self.partial = partial or []


class AttributeValidationFailed(BlendError):
    code = "attribute_validation_failed"
    http_status = 502


# --- scoring ------------------------------------------------------------

class EmbeddingUnavailable(BlendError):
    code = "embedding_unavailable"
    http_status = 502


class SentimentUnavailable(BlendError):
    code = "sentiment_unavailable"
    http_status = 502


class DimensionMismatch(BlendError):
    code = "dimension_mismatch"
    http_status = 400


class ZeroVector(BlendError):
    code = "zero_vector"
    http_status = 400


# --- blend --------------------------------------------------------------

class InsufficientConcepts(BlendError):
    code = "insufficient_concepts"
    http_status = 400


# --- studio -------------------------------------------------------------

class CorruptSessionFile(BlendError):
    code = "corrupt_session_file"
    http_status = 400


class UnsupportedSchemaVersion(BlendError):
    code = "unsupported_schema_version"
    http_status = 400


class UnknownSession(BlendError):
    code = "unknown_session"
    http_status = 404


class UnknownPrompt(BlendError):
    code = "unknown_prompt"
    http_status = 404


class UnknownObject(BlendError):
    code = "unknown_object"
    http_status = 404


class UnknownArtifact(BlendError):
    code = "unknown_artifact"
    http_status = 404


class PreconditionConflict(BlendError):
    """Session is not in the state the operation requires."""

    code = "precondition_conflict"
    http_status = 409


class ValidationError(BlendError):
    code = "validation"
    http_status = 400

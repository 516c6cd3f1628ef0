"""Exception hierarchy shared across the package.

Validation problems that callers are expected to inspect carry structured
payloads (violations, warnings) instead of bare strings.
"""

from __future__ import annotations


class SpectransError(Exception):
    """Base class for all package errors."""


class EncodingError(SpectransError):
    """Uploaded bytes did not decode as UTF-8."""


class EmptyTableError(SpectransError):
    """A pair table yielded zero valid rows."""

    def __init__(self, message: str, warnings: list[str] | None = None):
        super().__init__(message)
        self.warnings = warnings or []


class EmptyDocumentError(SpectransError):
    """Source document is empty after whitespace normalization."""


class SpecValidationError(SpectransError):
    """A translation spec violated its field domains."""

    def __init__(self, violations):
        self.violations = list(violations)
        detail = "; ".join(f"{v.field}: {v.reason}" for v in self.violations)
        super().__init__(f"invalid translation spec: {detail}")


class SpecParseError(SpectransError):
    """Spec JSON could not be parsed against the interchange schema."""


class LockedSpecError(SpectransError):
    """Attempted to mutate a locked spec session."""


class SpecNotLockedError(SpectransError):
    """Translation was requested while the spec session is still drafting."""


class JudgeParseError(SpectransError):
    """No error-span JSON array could be recovered from a judge reply."""


class ProviderError(SpectransError):
    """Model call failed after exhausting retries."""


class RateLimitError(ProviderError):
    """Model endpoint kept rate-limiting after retries."""


class ScriptExhaustedError(ProviderError):
    """Scripted mock provider ran out of replies.

    Subclasses ProviderError so an exhausted script surfaces exactly like a
    live endpoint failure would."""


class ProposalError(SpectransError):
    """Spec proposal could not be parsed after the retry."""


class RefineError(SpectransError):
    """Spec refinement could not be parsed after the retry; spec unchanged."""


class ChunkTranslationError(SpectransError):
    """Generation failed mid-run; carries the partial trace for inspection."""

    def __init__(self, message: str, trace: dict | None = None):
        super().__init__(message)
        self.trace = trace

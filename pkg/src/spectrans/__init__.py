"""Specification-driven agentic translation: an interactive translation
spec, reference injection, a four-stage generate/verify cycle with bounded
revisions, document memory, and full run tracing."""

from .chunking import Chunk, chunk_document, reconstruct
from .errors import (
    ChunkTranslationError,
    EmptyDocumentError,
    EmptyTableError,
    EncodingError,
    JudgeParseError,
    LockedSpecError,
    ProposalError,
    ProviderError,
    RateLimitError,
    RefineError,
    ScriptExhaustedError,
    SpecNotLockedError,
    SpecParseError,
    SpecValidationError,
    SpectransError,
)
from .llm import HttpProvider, MockProvider, ModelReply, ModelRequest, Provider
from .memory import DocumentMemory, memory_block, update_memory
from .mqm import (
    ErrorSpan,
    VerificationReport,
    compute_score,
    compute_verdict,
    parse_judge_response,
)
from .pipeline import PipelineConfig, translate_document
from .references import ReferenceSet, format_reference_block, parse_pair_table
from .specification import (
    Audience,
    Loyalty,
    Register,
    SpecSession,
    TranslationSpec,
    render_markdown,
    spec_from_json,
    spec_to_json,
    validate_spec,
)

__version__ = "0.1.0"

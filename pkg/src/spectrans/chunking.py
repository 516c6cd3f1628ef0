"""Document segmentation: paragraph chunks with a sentence-boundary fallback
for paragraphs that exceed the size cap.

Every chunk records the separator text that preceded it in the original
document, so concatenating separator + text over all chunks reproduces the
source exactly (up to trailing whitespace).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import EmptyDocumentError

DEFAULT_MAX_CHUNK_CHARS = 4000

# A sentence ends at terminal punctuation followed by whitespace (or end of
# text). The whitespace is captured so it can be reattached.
_SENTENCE_SPLIT = re.compile(r"(?<=[.!?。！？])(\s+)")


@dataclass(frozen=True)
class Chunk:
    index: int
    text: str
    boundary_kind: str  # "paragraph" or "sentence_fallback"
    separator: str = ""  # original text between the previous chunk and this one
    overlong: bool = False


def chunk_document(source: str, max_chunk_chars: int = DEFAULT_MAX_CHUNK_CHARS) -> tuple[list[Chunk], list[str]]:
    """Split a document into chunks of at most max_chunk_chars characters.

    Paragraphs (runs of lines separated by blank lines) are the primary unit.
    A paragraph over the cap is re-split at sentence boundaries and greedily
    packed. A single sentence over the cap becomes its own chunk, flagged
    overlong, with a warning.
    """
    if max_chunk_chars < 1:
        raise ValueError(f"max_chunk_chars must be positive, got {max_chunk_chars}")
    if not source or not source.strip():
        raise EmptyDocumentError("document is empty")

    paragraphs = _split_paragraphs(source)
    chunks: list[Chunk] = []
    warnings: list[str] = []

    for para_text, para_sep in paragraphs:
        if len(para_text) <= max_chunk_chars:
            chunks.append(Chunk(
                index=len(chunks), text=para_text,
                boundary_kind="paragraph", separator=para_sep,
            ))
            continue
        _pack_sentences(para_text, para_sep, max_chunk_chars, chunks, warnings)

    return chunks, warnings


def _split_paragraphs(source: str) -> list[tuple[str, str]]:
    """Return (paragraph_text, preceding_separator) with separators exact.

    A paragraph is a maximal run of lines that are non-blank (blank = empty
    or whitespace-only). Separators are recovered by walking a cursor over
    the source, so they capture the exact original bytes between paragraphs.
    """
    lines = source.split("\n")
    texts: list[str] = []
    para_lines: list[str] = []
    for line in lines:
        if line.strip() == "":
            if para_lines:
                texts.append("\n".join(para_lines))
                para_lines = []
        else:
            para_lines.append(line)
    if para_lines:
        texts.append("\n".join(para_lines))

    paragraphs: list[tuple[str, str]] = []
    cursor = 0
    for text in texts:
        pos = source.index(text, cursor)
        paragraphs.append((text, source[cursor:pos]))
        cursor = pos + len(text)
    return paragraphs


def _pack_sentences(para: str, para_sep: str, cap: int,
                    chunks: list[Chunk], warnings: list[str]) -> None:
    """Greedy sentence packing of an over-cap paragraph."""
    parts = _SENTENCE_SPLIT.split(para)
    # parts alternates sentence, whitespace, sentence, whitespace, ...
    sentences: list[str] = []
    gaps: list[str] = []  # gaps[i] separates sentences[i] and sentences[i+1]
    for i, part in enumerate(parts):
        if i % 2 == 0:
            sentences.append(part)
        else:
            gaps.append(part)
    # A trailing empty sentence can appear when the paragraph ends in
    # punctuation + whitespace; fold its gap into the previous sentence.
    if sentences and sentences[-1] == "" and gaps:
        sentences.pop()
        tail_ws = gaps.pop()
        sentences[-1] = sentences[-1] + tail_ws

    pending = para_sep
    current: list[str] = []  # alternating sentence/gap pieces
    current_len = 0

    def flush(last_gap: str) -> None:
        nonlocal pending, current, current_len
        if current:
            text = "".join(current)
            chunks.append(Chunk(
                index=len(chunks), text=text,
                boundary_kind="sentence_fallback", separator=pending,
                overlong=len(text) > cap,
            ))
            if len(text) > cap:
                warnings.append(
                    f"chunk {len(chunks) - 1}: single sentence of {len(text)} chars "
                    f"exceeds the {cap}-char cap"
                )
            pending = last_gap
            current = []
            current_len = 0

    for i, sentence in enumerate(sentences):
        gap_before = gaps[i - 1] if i > 0 else ""
        extra = (len(gap_before) if current else 0) + len(sentence)
        if current and current_len + extra > cap:
            flush(gap_before)
            current = [sentence]
            current_len = len(sentence)
        else:
            if current:
                current.append(gap_before)
            current.append(sentence)
            current_len += extra
    flush("")


def reconstruct(chunks: list[Chunk]) -> str:
    """Inverse of chunk_document, up to trailing whitespace of the source."""
    return "".join(chunk.separator + chunk.text for chunk in chunks)

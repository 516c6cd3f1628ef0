"""Rolling document memory carried across chunks: a proper-noun ledger, a
bilingual running summary, and the immediately preceding chunk pair.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .llm import DEFAULT_TEMPERATURES, ModelRequest, Provider

SUMMARY_MIN_WORDS = 50
SUMMARY_MAX_WORDS = 150

_CJK = re.compile(r"[぀-ヿ㐀-鿿]")


@dataclass(frozen=True)
class DocumentMemory:
    """State threaded through a run. Immutable; updates produce new values."""

    ledger: tuple[tuple[str, str], ...] = ()
    summary: str = ""
    prev_chunk: tuple[str, str] | None = None  # (source, translation)


def memory_block(memory: DocumentMemory) -> str:
    """Render the memory block injected into generation prompts.

    Always shows all three components in fixed order, with "(none)" for the
    empty ones, so prompts stay structurally stable across chunks.
    """
    lines = ["### Established terminology", ""]
    if memory.ledger:
        lines.extend(f"{s} → {t}" for s, t in memory.ledger)
        lines.append("")
        lines.append("Render these names and terms exactly as established above.")
    else:
        lines.append("(none)")

    lines.extend(["", "### Document summary so far", ""])
    lines.append(memory.summary if memory.summary.strip() else "(none)")

    lines.extend(["", "### Immediately preceding chunk", ""])
    if memory.prev_chunk is not None:
        lines.append("Source:")
        lines.append(memory.prev_chunk[0])
        lines.append("Translation:")
        lines.append(memory.prev_chunk[1])
    else:
        lines.append("(none)")

    return "\n".join(lines)


def _truncate_summary(summary: str, target_lang: str) -> tuple[str, list[str]]:
    """Enforce the summary length window, warning on the low side.

    Unsegmented CJK summaries have no usable word boundaries, so the window
    is applied in characters at two characters per word.
    """
    warnings: list[str] = []
    cjk_mode = target_lang.lower()[:2] in ("ja", "zh") and bool(_CJK.search(summary))
    if cjk_mode:
        limit = SUMMARY_MAX_WORDS * 2
        if len(summary) > limit:
            summary = summary[:limit]
            warnings.append(f"memory summary truncated to {limit} characters")
        if len(summary) < SUMMARY_MIN_WORDS * 2:
            warnings.append("memory summary is shorter than the guideline window")
        return summary, warnings

    words = summary.split()
    if len(words) > SUMMARY_MAX_WORDS:
        summary = " ".join(words[:SUMMARY_MAX_WORDS])
        warnings.append(f"memory summary truncated to {SUMMARY_MAX_WORDS} words")
    if len(words) < SUMMARY_MIN_WORDS:
        warnings.append("memory summary is shorter than the guideline window")
    return summary, warnings


def _update_prompt(memory: DocumentMemory, chunk_source: str, chunk_target: str,
                   source_lang: str, target_lang: str) -> tuple[str, str]:
    system = (
        "You maintain working memory for a long document translation. "
        "You reply with strict JSON and nothing else."
    )
    ledger_lines = "\n".join(f"{s} → {t}" for s, t in memory.ledger) or "(none)"
    user = (
        f"A document is being translated from {source_lang} to {target_lang}, one chunk at a time.\n"
        "\n"
        "Established terminology so far:\n"
        f"{ledger_lines}\n"
        "\n"
        "Running summary so far:\n"
        f"{memory.summary or '(none)'}\n"
        "\n"
        "Latest chunk source:\n"
        f"{chunk_source}\n"
        "\n"
        "Latest chunk translation:\n"
        f"{chunk_target}\n"
        "\n"
        "Update the memory. Reply with one JSON object of this exact shape:\n"
        '{"new_terms": [["source term", "target rendering"], ...], "summary": "..."}\n'
        "\n"
        "new_terms lists proper nouns and recurring terms newly established in this chunk, "
        "as [source, target] pairs; do not repeat terms already listed above. "
        f"summary rewrites the running summary of everything translated so far, in {SUMMARY_MIN_WORDS} "
        f"to {SUMMARY_MAX_WORDS} words, mentioning entities by their established target renderings."
    )
    return system, user


def _parse_update(raw: str) -> tuple[list[tuple[str, str]], str]:
    decoder = json.JSONDecoder()
    pos = raw.find("{")
    data = None
    while pos != -1:
        try:
            value, _ = decoder.raw_decode(raw, pos)
        except json.JSONDecodeError:
            pass
        else:
            if isinstance(value, dict):
                data = value
                break
        pos = raw.find("{", pos + 1)
    if data is None:
        raise ValueError("no JSON object in memory update reply")

    terms_raw = data.get("new_terms", [])
    if not isinstance(terms_raw, list):
        raise ValueError("new_terms must be a list")
    terms: list[tuple[str, str]] = []
    for item in terms_raw:
        if (isinstance(item, (list, tuple)) and len(item) == 2
                and all(isinstance(x, str) and x.strip() for x in item)):
            terms.append((item[0].strip(), item[1].strip()))

    summary = data.get("summary", "")
    if not isinstance(summary, str):
        raise ValueError("summary must be a string")
    return terms, summary


def update_memory(memory: DocumentMemory, chunk_source: str, chunk_target: str,
                  llm: Provider, source_lang: str, target_lang: str) -> tuple[DocumentMemory, list[str]]:
    """One model call that refreshes ledger and summary after a chunk.

    Ledger merging is first-established-wins: proposals whose source term is
    already present are discarded. On any model or parse failure the ledger
    and summary are left unchanged and only prev_chunk advances.
    """
    system, user = _update_prompt(memory, chunk_source, chunk_target, source_lang, target_lang)
    request = ModelRequest(
        stage_tag="memory_update",
        system=system,
        user=user,
        temperature=DEFAULT_TEMPERATURES["memory_update"],
    )
    warnings: list[str] = []
    try:
        reply = llm.complete(request)
        proposed_terms, proposed_summary = _parse_update(reply.text)
    except Exception as exc:
        warnings.append(f"memory update failed, keeping previous memory: {exc}")
        return DocumentMemory(
            ledger=memory.ledger,
            summary=memory.summary,
            prev_chunk=(chunk_source, chunk_target),
        ), warnings

    established = {s for s, _ in memory.ledger}
    ledger = list(memory.ledger)
    for source, target in proposed_terms:
        if source in established:
            existing = dict(memory.ledger)[source]
            if existing != target:
                warnings.append(
                    f"term {source!r} already established as {existing!r}; ignored proposal {target!r}"
                )
            continue
        ledger.append((source, target))
        established.add(source)

    summary, summary_warnings = _truncate_summary(proposed_summary.strip(), target_lang)
    warnings.extend(summary_warnings)

    return DocumentMemory(
        ledger=tuple(ledger),
        summary=summary,
        prev_chunk=(chunk_source, chunk_target),
    ), warnings


def memory_to_json(memory: DocumentMemory) -> dict:
    return {
        "ledger": [list(p) for p in memory.ledger],
        "summary": memory.summary,
        "prev_chunk": list(memory.prev_chunk) if memory.prev_chunk else None,
    }


def memory_from_json(data: dict) -> DocumentMemory:
    prev = data.get("prev_chunk")
    return DocumentMemory(
        ledger=tuple((s, t) for s, t in data.get("ledger", [])),
        summary=data.get("summary", ""),
        prev_chunk=(prev[0], prev[1]) if prev else None,
    )

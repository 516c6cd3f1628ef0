"""All prompt text lives here: stage system prompts, the generation prompt
assembler, and the error-annotation prompt with its few-shot exemplars.

Prompt assembly is pure string work. Given the same inputs it must produce
byte-identical output, because run traces are diffed across runs.
"""

from __future__ import annotations

import json

from .memory import DocumentMemory, memory_block
from .mqm import SEVERITIES, SUB_CATEGORIES, TOP_CATEGORIES, ErrorSpan
from .references import ReferenceSet, format_reference_block
from .specification import TranslationSpec, render_markdown

# Bump whenever judge prompt wording or exemplars change, so stored traces
# can be compared like-for-like.
JUDGE_PROMPT_VERSION = "judge-v1"

IDENTIFY_SYSTEM = (
    "You are a translation analyst. You study a source text before it is "
    "translated and reply with strict JSON only."
)

GENERATE_SYSTEM = (
    "You are a professional translator. You follow the translation "
    "specification exactly and output only the translation text, with no "
    "preamble, notes, or markup."
)

VERIFY_SYSTEM = (
    "You are an annotator of translation errors. You compare a candidate "
    "translation against its source and a translation specification, mark "
    "error spans, and reply with a JSON array only. You never report a score."
)

IDENTIFICATION_KEYS = ("skopos", "audience", "register", "genre", "stance", "notes")


def identification_prompt(spec: TranslationSpec, refs: ReferenceSet, chunk_source: str) -> str:
    ref_block = format_reference_block(refs)
    parts = [
        f"Analyse the following {spec.source_lang} text before it is translated "
        f"into {spec.target_lang}.",
        "",
        "### Translation specification",
        "",
        render_markdown(spec),
    ]
    if ref_block:
        parts.extend(["### Reference material", "", ref_block, ""])
    parts.extend([
        "### Source text",
        "",
        chunk_source,
        "",
        "Reply with one JSON object containing exactly these string fields:",
        json.dumps({key: "..." for key in IDENTIFICATION_KEYS}, indent=2),
        "",
        "skopos: what this text is for and what its translation will be for. "
        "audience: who the text addresses and who will read the translation. "
        "register: tone, formality, and voice of the source. "
        "genre: the text's genre and its conventions. "
        "stance: the author's attitude and point of view. "
        "notes: terminology risks, culture-bound items, ambiguities, numbers, "
        "names, or anything else needing special care.",
    ])
    return "\n".join(parts)


def generation_prompt(spec: TranslationSpec, refs: ReferenceSet,
                      identification: dict[str, str], memory: DocumentMemory,
                      chunk_source: str, feedback: list[ErrorSpan] | None = None) -> str:
    """Assemble the translation prompt for one chunk.

    Section order is fixed: task preamble, specification, reference material,
    source analysis, document memory, source text, output instruction, and,
    on revision passes only, the required corrections.
    """
    ref_block = format_reference_block(refs)
    parts = [
        f"Translate the source text below from {spec.source_lang} to {spec.target_lang}, "
        "following the translation specification exactly.",
        "",
        "### Translation specification",
        "",
        render_markdown(spec),
    ]
    if ref_block:
        parts.extend(["### Reference material", "", ref_block, ""])
    analysis_lines = [f"- {key}: {identification.get(key, '')}" for key in IDENTIFICATION_KEYS]
    parts.extend([
        "### Source analysis",
        "",
        *analysis_lines,
        "",
        memory_block(memory),
        "",
        "### Source text",
        "",
        chunk_source,
        "",
        "Output only the translation of the source text above.",
    ])
    if feedback:
        lines = [
            f'- [{e.severity}] {e.category}: "{e.span}" ({e.explanation})'
            for e in feedback
        ]
        parts.extend([
            "",
            "### Required corrections",
            "",
            "Your previous draft contained the errors below. Produce a corrected "
            "translation that fixes every one of them.",
            "",
            *lines,
        ])
    return "\n".join(parts)


def _category_inventory() -> str:
    lines = ["Error categories (use exactly these identifiers):"]
    for top in TOP_CATEGORIES:
        subs = SUB_CATEGORIES.get(top)
        if subs:
            lines.append(f"- {top}, with subcategories: " + ", ".join(f"{top}/{s}" for s in subs))
        else:
            lines.append(f"- {top}")
    lines.append("Severities: " + ", ".join(SEVERITIES) + ".")
    return "\n".join(lines)


# Compact worked examples of the annotation format. The third teaches the
# empty-array case for a clean translation.
_FEW_SHOTS = (
    {
        "source_lang": "English",
        "target_lang": "German",
        "source": "The contract may be terminated by either party with thirty days' written notice.",
        "candidate": "Der Vertrag kann von beiden Parteien mit dreißig Tagen Kündigungsfrist mündlich gekündigt werden.",
        "answer": [
            {
                "span": "mündlich",
                "category": "accuracy/mistranslation",
                "severity": "critical",
                "explanation": "The source requires written notice; the translation says oral.",
            },
        ],
    },
    {
        "source_lang": "Japanese",
        "target_lang": "English",
        "source": "田中教授は三月に退官し、後任には佐藤氏が就任する予定である。",
        "candidate": "Professor Tanaka will retire in March. A successor are expected to take over.",
        "answer": [
            {
                "span": "A successor",
                "category": "accuracy/omission",
                "severity": "major",
                "explanation": "The successor is named in the source (Mr. Sato) but not in the translation.",
            },
            {
                "span": "are expected",
                "category": "fluency/grammar",
                "severity": "minor",
                "explanation": "Subject-verb agreement: a singular subject takes 'is'.",
            },
        ],
    },
    {
        "source_lang": "English",
        "target_lang": "French",
        "source": "Please keep this door closed.",
        "candidate": "Veuillez garder cette porte fermée.",
        "answer": [],
    },
)


def _render_few_shots() -> str:
    parts = []
    for i, shot in enumerate(_FEW_SHOTS, start=1):
        parts.append(
            f"Example {i} ({shot['source_lang']} to {shot['target_lang']}):\n"
            f"Source: {shot['source']}\n"
            f"Candidate translation: {shot['candidate']}\n"
            f"Annotation: {json.dumps(shot['answer'], ensure_ascii=False)}"
        )
    return "\n\n".join(parts)


def verification_prompt(spec: TranslationSpec, refs: ReferenceSet,
                        chunk_source: str, candidate: str) -> str:
    """Assemble the error-annotation prompt for one draft."""
    ref_block = format_reference_block(refs)
    parts = [
        f"Annotate translation errors in a candidate {spec.target_lang} translation "
        f"of a {spec.source_lang} source text. Judge the candidate against the source "
        "and against the translation specification below: a rendering the "
        "specification calls for is correct even where a different default exists.",
        "",
        "### Translation specification",
        "",
        render_markdown(spec),
    ]
    if ref_block:
        parts.extend(["### Reference material", "", ref_block, ""])
    parts.extend([
        _category_inventory(),
        "",
        "Mark each error as an object with fields span (the exact erroneous text "
        "copied from the candidate), category, severity, and explanation. "
        "Critical errors invert or block the message, major errors distort it, "
        "minor errors are noticeable but not misleading.",
        "",
        _render_few_shots(),
        "",
        "### Source text",
        "",
        chunk_source,
        "",
        "### Candidate translation",
        "",
        candidate,
        "",
        "Begin your reply with the JSON array of error objects, before any other "
        "commentary. Reply with [] if the candidate has no errors.",
    ])
    return "\n".join(parts)


def spec_propose_system() -> str:
    return (
        "You are a translation project consultant. You read a source text and "
        "a client brief and draft a translation specification as strict JSON."
    )


def spec_refine_system() -> str:
    return (
        "You are a translation project consultant revising a translation "
        "specification to follow the client's latest instructions. You reply "
        "with the full revised specification as strict JSON."
    )

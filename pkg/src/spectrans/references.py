"""Reference material handling: glossary and example tables, parallel texts,
style guides, and the prompt block that injects them.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field, replace

from .errors import EmptyTableError, EncodingError

PAIRED_EXAMPLE_BUDGET = 100


@dataclass(frozen=True)
class ReferenceSet:
    """Everything a session has uploaded to steer a run.

    glossary: (source term, target term) pairs, conflict-resolved.
    paired_examples: (source sentence, target sentence) pairs.
    parallel_texts: (name, body) target-language texts.
    style_guide: free-form target-side style notes.
    """

    glossary: tuple[tuple[str, str], ...] = ()
    paired_examples: tuple[tuple[str, str], ...] = ()
    parallel_texts: tuple[tuple[str, str], ...] = ()
    style_guide: str | None = None


def _decode(data: bytes, kind: str) -> str:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"{kind} upload is not valid UTF-8: {exc}") from exc
    if text.startswith("﻿"):
        text = text[1:]
    return text


def parse_pair_table(data: bytes, kind: str = "glossary") -> tuple[list[tuple[str, str]], list[str]]:
    """Parse a two-column TSV or CSV upload into (pairs, warnings).

    The delimiter is sniffed from the first non-empty line: a tab anywhere in
    it means TSV, otherwise CSV. Header rows whose cells are "source" and
    "target" (any case) are skipped. Rows with fewer than two non-empty cells
    are dropped with a warning; extra cells beyond two are dropped with a
    warning. Zero valid rows is an error.
    """
    text = _decode(data, kind)
    lines = text.split("\n")

    first_content = next((line for line in lines if line.strip()), None)
    if first_content is None:
        raise EmptyTableError(f"{kind} table contains no rows", [])
    use_tab = "\t" in first_content

    pairs: list[tuple[str, str]] = []
    warnings: list[str] = []

    if use_tab:
        rows = [(i + 1, line.split("\t")) for i, line in enumerate(lines)]
    else:
        reader = csv.reader(io.StringIO(text))
        rows = [(reader.line_num, cells) for cells in reader]

    first_content_row = True
    for line_num, cells in rows:
        cells = [c.strip() for c in cells]
        non_empty = [c for c in cells if c]
        if not non_empty:
            continue
        is_first = first_content_row
        first_content_row = False
        if len(non_empty) < 2:
            warnings.append(f"{kind} row {line_num}: fewer than two columns, skipped")
            continue
        if len(non_empty) > 2:
            warnings.append(f"{kind} row {line_num}: more than two columns, extra cells dropped")
        source, target = non_empty[0], non_empty[1]
        if is_first and source.lower() == "source" and target.lower() == "target":
            continue
        pairs.append((source, target))

    if not pairs:
        raise EmptyTableError(f"{kind} table contains no usable rows", warnings)
    return pairs, warnings


def serialize_pair_table(pairs: list[tuple[str, str]] | tuple[tuple[str, str], ...]) -> bytes:
    """Serialize pairs so that reparsing yields the same pairs back.

    Plain TSV is emitted when every cell is free of tabs and line breaks.
    Otherwise the output is fully quoted CSV preceded by a ``source,target``
    header row: the tab-free header line makes the sniffer pick comma mode,
    and the header itself is skipped on reparse. A leading pair that happens
    to spell out the header words gets an explicit header row for the same
    reason.
    """
    needs_csv = any(
        "\t" in cell or "\n" in cell or "\r" in cell for pair in pairs for cell in pair
    )
    if needs_csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_ALL)
        writer.writerow(("source", "target"))
        for pair in pairs:
            writer.writerow(pair)
        return buf.getvalue().encode("utf-8")
    header = ""
    if pairs and tuple(c.lower() for c in pairs[0]) == ("source", "target"):
        header = "source\ttarget\n"
    body = "".join(f"{s}\t{t}\n" for s, t in pairs)
    return (header + body).encode("utf-8")


def resolve_glossary_conflicts(pairs: list[tuple[str, str]]) -> tuple[list[tuple[str, str]], list[str]]:
    """Collapse duplicate source terms, keeping the last-seen target.

    Output order follows each source term's last occurrence. A warning names
    both targets for every conflict.
    """
    warnings: list[str] = []
    last: dict[str, str] = {}
    for source, target in pairs:
        if source in last:
            previous = last[source]
            if previous != target:
                warnings.append(
                    f"glossary term {source!r} maps to both {previous!r} and "
                    f"{target!r}; keeping {target!r}"
                )
            else:
                warnings.append(
                    f"glossary term {source!r} repeated with the same target {target!r}"
                )
            del last[source]
        last[source] = target
    return list(last.items()), warnings


def check_example_budget(pairs: list[tuple[str, str]] | tuple[tuple[str, str], ...]) -> list[str]:
    if len(pairs) > PAIRED_EXAMPLE_BUDGET:
        return [
            f"paired examples: {len(pairs)} rows exceeds the soft budget of "
            f"{PAIRED_EXAMPLE_BUDGET}; all are still injected and prompts may become very long"
        ]
    return []


def format_reference_block(refs: ReferenceSet) -> str:
    """Render the reference material block injected into prompts.

    Category order is fixed: glossary, paired examples, parallel texts, style
    guide. Empty categories are omitted entirely; a fully empty set renders
    as the empty string.
    """
    sections: list[str] = []

    if refs.glossary:
        lines = [f"{s} → {t}" for s, t in refs.glossary]
        sections.append("### Glossary\n\n" + "\n".join(lines))

    if refs.paired_examples:
        lines = []
        for i, (s, t) in enumerate(refs.paired_examples, start=1):
            lines.append(f"[{i}] Source: {s}")
            lines.append(f"[{i}] Target: {t}")
        sections.append("### Paired examples\n\n" + "\n".join(lines))

    if refs.parallel_texts:
        parts = [f"--- {name} ---\n{body}" for name, body in refs.parallel_texts]
        sections.append("### Parallel texts\n\n" + "\n\n".join(parts))

    if refs.style_guide and refs.style_guide.strip():
        sections.append("### Style guide\n\n" + refs.style_guide.strip())

    return "\n\n".join(sections)


def add_glossary(refs: ReferenceSet, pairs: list[tuple[str, str]]) -> tuple[ReferenceSet, list[str]]:
    """Merge new glossary rows into the set, resolving conflicts last-wins
    across the combined sequence."""
    merged, warnings = resolve_glossary_conflicts(list(refs.glossary) + pairs)
    return replace(refs, glossary=tuple(merged)), warnings


def add_paired_examples(refs: ReferenceSet, pairs: list[tuple[str, str]]) -> tuple[ReferenceSet, list[str]]:
    combined = tuple(refs.paired_examples) + tuple(pairs)
    return replace(refs, paired_examples=combined), check_example_budget(combined)


def add_parallel_text(refs: ReferenceSet, name: str, body: str) -> ReferenceSet:
    return replace(refs, parallel_texts=tuple(refs.parallel_texts) + ((name, body),))


def set_style_guide(refs: ReferenceSet, body: str) -> ReferenceSet:
    return replace(refs, style_guide=body)


def refs_to_json(refs: ReferenceSet) -> dict:
    return {
        "glossary": [list(p) for p in refs.glossary],
        "paired_examples": [list(p) for p in refs.paired_examples],
        "parallel_texts": [list(p) for p in refs.parallel_texts],
        "style_guide": refs.style_guide,
    }


def refs_from_json(data: dict) -> ReferenceSet:
    return ReferenceSet(
        glossary=tuple((s, t) for s, t in data.get("glossary", [])),
        paired_examples=tuple((s, t) for s, t in data.get("paired_examples", [])),
        parallel_texts=tuple((n, b) for n, b in data.get("parallel_texts", [])),
        style_guide=data.get("style_guide"),
    )

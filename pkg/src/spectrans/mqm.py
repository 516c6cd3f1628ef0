"""Error-span quality verification: taxonomy, judge-output parsing, scoring,
and the accept/revise verdict.

The judge model reports error spans only. Scores are always recomputed here
from the span list; any score the judge volunteers is discarded.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import JudgeParseError

TOP_CATEGORIES = ("accuracy", "fluency", "terminology", "style", "locale_convention", "other")

SUB_CATEGORIES = {
    "accuracy": ("mistranslation", "addition", "omission", "untranslated", "do_not_translate"),
    "fluency": ("grammar", "punctuation", "spelling", "register", "inconsistency", "character_encoding"),
}

SEVERITIES = ("critical", "major", "minor")

SEVERITY_PENALTIES = {"critical": -25, "major": -5, "minor": -1}

DEFAULT_ACCEPT_THRESHOLD = -2


@dataclass(frozen=True)
class ErrorSpan:
    span: str
    category: str  # "top" or "top/sub"
    severity: str
    explanation: str = ""
    unlocatable: bool = False


@dataclass(frozen=True)
class VerificationReport:
    errors: tuple[ErrorSpan, ...]
    score: int | None
    verdict: str  # "accept" or "revise"
    iteration: int
    warnings: tuple[str, ...] = ()


def compute_score(errors: list[ErrorSpan] | tuple[ErrorSpan, ...]) -> int:
    """Score = -25 per critical, -5 per major, -1 per minor. Zero errors = 0."""
    return sum(SEVERITY_PENALTIES[e.severity] for e in errors)


def compute_verdict(score: int, threshold: int = DEFAULT_ACCEPT_THRESHOLD) -> str:
    return "accept" if score >= threshold else "revise"


def make_report(errors: list[ErrorSpan], iteration: int,
                threshold: int = DEFAULT_ACCEPT_THRESHOLD,
                warnings: list[str] | tuple[str, ...] = ()) -> VerificationReport:
    """Build an internally consistent report from a parsed span list."""
    score = compute_score(errors)
    return VerificationReport(
        errors=tuple(errors),
        score=score,
        verdict=compute_verdict(score, threshold),
        iteration=iteration,
        warnings=tuple(warnings),
    )


_FENCE = re.compile(r"```[a-zA-Z0-9_-]*\n(.*?)```", re.DOTALL)


def _candidate_texts(raw: str) -> list[str]:
    """Fenced block contents first (judges often wrap JSON in fences), then
    the raw text itself."""
    texts = [m.group(1) for m in _FENCE.finditer(raw)]
    texts.append(raw)
    return texts


def _first_json_array(raw: str):
    """Locate and decode the first valid JSON array in the reply."""
    decoder = json.JSONDecoder()
    for text in _candidate_texts(raw):
        pos = text.find("[")
        while pos != -1:
            try:
                value, _ = decoder.raw_decode(text, pos)
            except json.JSONDecodeError:
                pass
            else:
                if isinstance(value, list):
                    return value
            pos = text.find("[", pos + 1)
    return None


def _normalize_token(token: str) -> str:
    return re.sub(r"[\s-]+", "_", token.strip().lower())


def _normalize_category(raw_value, warnings: list[str]) -> str:
    """Map a judge-reported category onto the taxonomy.

    Unknown or missing top categories become "other"; unknown subcategories
    are dropped; subcategories under tops that have none are dropped. Every
    adjustment emits a warning.
    """
    if not isinstance(raw_value, str) or not raw_value.strip():
        warnings.append("error span missing category; defaulted to 'other'")
        return "other"
    parts = raw_value.split("/", 1)
    top = _normalize_token(parts[0])
    sub = _normalize_token(parts[1]) if len(parts) > 1 and parts[1].strip() else None

    if top not in TOP_CATEGORIES:
        warnings.append(f"unknown category {raw_value!r}; defaulted to 'other'")
        return "other"
    if sub is None:
        return top
    allowed = SUB_CATEGORIES.get(top)
    if allowed is None:
        warnings.append(f"category {top!r} takes no subcategory; dropped {sub!r}")
        return top
    if sub not in allowed:
        warnings.append(f"unknown subcategory {raw_value!r}; kept top category {top!r}")
        return top
    return f"{top}/{sub}"


def _normalize_severity(raw_value, warnings: list[str]) -> str:
    if not isinstance(raw_value, str) or not raw_value.strip():
        warnings.append("error span missing severity; defaulted to 'minor'")
        return "minor"
    severity = _normalize_token(raw_value)
    if severity not in SEVERITIES:
        warnings.append(f"unknown severity {raw_value!r}; defaulted to 'minor'")
        return "minor"
    return severity


def parse_judge_response(raw: str, target_text: str) -> tuple[list[ErrorSpan], list[str]]:
    """Parse a judge reply into normalized error spans plus parse warnings.

    The first valid JSON array found anywhere in the reply is used. Element
    dictionaries are normalized field by field; spans that cannot be located
    verbatim in the candidate translation are kept but flagged unlocatable.
    Raises JudgeParseError when no JSON array can be found at all.
    """
    items = _first_json_array(raw)
    if items is None:
        raise JudgeParseError("no JSON array found in judge reply")

    spans: list[ErrorSpan] = []
    warnings: list[str] = []
    for i, item in enumerate(items):
        if not isinstance(item, dict):
            warnings.append(f"judge array element {i} is not an object; skipped")
            continue
        category = _normalize_category(item.get("category"), warnings)
        severity = _normalize_severity(item.get("severity"), warnings)

        raw_span = item.get("span")
        if not isinstance(raw_span, str) or raw_span == "":
            warnings.append(f"judge array element {i} has no span text; kept as unlocatable")
            span_text, unlocatable = "", True
        else:
            span_text = raw_span
            unlocatable = span_text not in target_text
            if unlocatable:
                warnings.append(f"span {span_text!r} not found in the candidate translation")

        explanation = item.get("explanation")
        if not isinstance(explanation, str):
            explanation = "" if explanation is None else str(explanation)

        # Judges sometimes volunteer their own score; it is never trusted.
        spans.append(ErrorSpan(
            span=span_text, category=category, severity=severity,
            explanation=explanation, unlocatable=unlocatable,
        ))
    return spans, warnings


_NUMBER = re.compile(r"\d+(?:[,.]\d+)*")

_FULLWIDTH_DIGITS = str.maketrans("０１２３４５６７８９", "0123456789")


def check_numeral_preservation(source: str, target: str) -> list[str]:
    """Heuristic check that every number in the source survives translation.

    Grouping commas are ignored on both sides and fullwidth digits in the
    target are folded to ASCII before the substring test.
    """
    folded_target = target.translate(_FULLWIDTH_DIGITS)
    folded_target = re.sub(r"(?<=\d),(?=\d)", "", folded_target)

    warnings: list[str] = []
    seen: set[str] = set()
    for match in _NUMBER.finditer(source):
        token = match.group(0).replace(",", "")
        if token in seen:
            continue
        seen.add(token)
        if token not in folded_target:
            warnings.append(f"number {match.group(0)!r} from the source was not found in the translation")
    return warnings

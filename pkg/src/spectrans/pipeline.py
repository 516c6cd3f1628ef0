"""Per-chunk translation cycle (analyse, prompt, generate, verify) with a
bounded revision loop, document-level memory threading, and full tracing.

Every model exchange of a run is captured in the trace, including the exact
prompts sent, so a run can be audited stage by stage after the fact.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
import uuid
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

from .chunking import Chunk, chunk_document
from .errors import ChunkTranslationError, JudgeParseError, ProviderError, SpecNotLockedError
from .llm import DEFAULT_TEMPERATURES, ModelRequest, Provider, RecordingProvider
from .memory import DocumentMemory, memory_to_json, update_memory
from .mqm import (
    DEFAULT_ACCEPT_THRESHOLD,
    ErrorSpan,
    VerificationReport,
    check_numeral_preservation,
    make_report,
    parse_judge_response,
)
from .prompts import (
    GENERATE_SYSTEM,
    IDENTIFICATION_KEYS,
    IDENTIFY_SYSTEM,
    JUDGE_PROMPT_VERSION,
    VERIFY_SYSTEM,
    generation_prompt,
    identification_prompt,
    verification_prompt,
)
from .references import ReferenceSet
from .specification import SpecSession, TranslationSpec, render_markdown, spec_to_json

MAX_REVISIONS_CAP = 5


@dataclass(frozen=True)
class PipelineConfig:
    threshold: int = DEFAULT_ACCEPT_THRESHOLD
    max_revisions: int = 2
    max_chunk_chars: int = 4000
    generation_temperature: float = 0.3

    def __post_init__(self):
        for name in ("threshold", "max_revisions", "max_chunk_chars"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
        if not isinstance(self.generation_temperature, (int, float)) or isinstance(self.generation_temperature, bool):
            raise ValueError(f"generation_temperature must be a number, got {self.generation_temperature!r}")
        if self.max_revisions < 0 or self.max_revisions > MAX_REVISIONS_CAP:
            raise ValueError(f"max_revisions must be within [0, {MAX_REVISIONS_CAP}], got {self.max_revisions}")
        if self.max_chunk_chars < 1:
            raise ValueError(f"max_chunk_chars must be positive, got {self.max_chunk_chars}")

    def to_json(self) -> dict:
        return asdict(self)


def _first_json_object(raw: str) -> dict | None:
    decoder = json.JSONDecoder()
    pos = raw.find("{")
    while pos != -1:
        try:
            value, _ = decoder.raw_decode(raw, pos)
        except json.JSONDecodeError:
            pass
        else:
            if isinstance(value, dict):
                return value
        pos = raw.find("{", pos + 1)
    return None


def identify(chunk_source: str, spec: TranslationSpec, llm: Provider,
             refs: ReferenceSet = ReferenceSet()) -> tuple[dict[str, str], list[str]]:
    """Pre-translation source analysis: one call, six free-text fields.

    Identification is advisory context, so it degrades instead of failing:
    missing keys become empty strings and a doubly unparseable reply yields
    an all-empty result, each with a warning.
    """
    user = identification_prompt(spec, refs, chunk_source)
    warnings: list[str] = []

    data: dict | None = None
    for attempt in range(2):
        prompt = user if attempt == 0 else (
            user + "\n\nYour previous reply could not be parsed. "
            "Reply with exactly one JSON object containing the six fields and nothing else."
        )
        request = ModelRequest(stage_tag="identify", system=IDENTIFY_SYSTEM,
                               user=prompt, temperature=DEFAULT_TEMPERATURES["identify"])
        reply = llm.complete(request)
        data = _first_json_object(reply.text)
        if data is not None:
            break
        if attempt == 0:
            warnings.append("source analysis reply had no JSON object; reprompting once")

    if data is None:
        warnings.append("source analysis failed twice; proceeding with empty analysis")
        return {key: "" for key in IDENTIFICATION_KEYS}, warnings

    result: dict[str, str] = {}
    for key in IDENTIFICATION_KEYS:
        value = data.get(key)
        if value is None:
            warnings.append(f"source analysis missing field {key!r}; defaulted to empty")
            result[key] = ""
        elif isinstance(value, str):
            result[key] = value
        else:
            result[key] = json.dumps(value, ensure_ascii=False)
    return result, warnings


def report_to_json(report: VerificationReport) -> dict:
    return {
        "errors": [
            {
                "span": e.span,
                "category": e.category,
                "severity": e.severity,
                "explanation": e.explanation,
                "unlocatable": e.unlocatable,
            }
            for e in report.errors
        ],
        "score": report.score,
        "verdict": report.verdict,
        "iteration": report.iteration,
        "warnings": list(report.warnings),
    }


def _verify_draft(spec: TranslationSpec, refs: ReferenceSet, chunk_source: str,
                  draft: str, iteration: int, config: PipelineConfig,
                  llm: Provider) -> tuple[VerificationReport, str, bool]:
    """One verification pass. Returns (report, prompt, parse_failed).

    A judge reply with no JSON array gets one retry call; a second failure
    degrades to a flagged accept with no score, so generation work survives
    judge flakiness.
    """
    user = verification_prompt(spec, refs, chunk_source, draft)
    request = ModelRequest(stage_tag="verify", system=VERIFY_SYSTEM, user=user,
                           temperature=DEFAULT_TEMPERATURES["verify"])
    parse_warnings: list[str] = []
    for attempt in range(2):
        reply = llm.complete(request)
        try:
            spans, warnings = parse_judge_response(reply.text, draft)
        except JudgeParseError as exc:
            parse_warnings.append(f"judge reply unparseable (attempt {attempt + 1}): {exc}")
            continue
        report = make_report(spans, iteration=iteration, threshold=config.threshold,
                             warnings=parse_warnings + warnings)
        return report, user, False

    report = VerificationReport(
        errors=(), score=None, verdict="accept", iteration=iteration,
        warnings=tuple(parse_warnings + ["verification failed; draft accepted unverified"]),
    )
    return report, user, True


def translate_chunk(chunk: Chunk, spec: TranslationSpec, refs: ReferenceSet,
                    memory: DocumentMemory, config: PipelineConfig, llm: Provider,
                    on_event=None) -> dict:
    """Run the full cycle on one chunk and return its trace record.

    The record's "translation" field holds the returned draft: the first
    accepted one, or on loop exhaustion the best-scoring draft (ties broken
    by recency) flagged as not accepted.
    """
    emit = on_event or (lambda name, payload: None)
    started = time.monotonic()

    emit("stage_started", {"chunk_index": chunk.index, "stage": "identify"})
    identification, ident_warnings = identify(chunk.text, spec, llm, refs)
    emit("stage_finished", {"chunk_index": chunk.index, "stage": "identify",
                            "identification": identification})

    assembled_prompts: list[str] = []
    verification_prompts: list[str] = []
    drafts: list[str] = []
    reports: list[VerificationReport] = []
    verification_failed = False
    accepted_index: int | None = None
    feedback: list[ErrorSpan] | None = None

    record = {
        "chunk": asdict(chunk),
        "identification": identification,
        "identification_warnings": ident_warnings,
        "assembled_prompts": assembled_prompts,
        "verification_prompts": verification_prompts,
        "drafts": drafts,
        "reports": [],
        "accepted_draft_index": None,
        "accepted": False,
        "verification_failed": False,
        "translation": "",
        "numeral_warnings": [],
        "elapsed_ms": 0.0,
    }

    for iteration in range(config.max_revisions + 1):
        prompt = generation_prompt(spec, refs, identification, memory, chunk.text, feedback)
        assembled_prompts.append(prompt)
        emit("stage_started", {"chunk_index": chunk.index, "stage": "generate",
                               "iteration": iteration})
        request = ModelRequest(stage_tag="generate", system=GENERATE_SYSTEM, user=prompt,
                               temperature=config.generation_temperature)
        try:
            draft = llm.complete(request).text
        except ProviderError as exc:
            record["reports"] = [report_to_json(r) for r in reports]
            raise ChunkTranslationError(
                f"generation failed on chunk {chunk.index}: {exc}", trace=record) from exc
        drafts.append(draft)
        emit("stage_finished", {"chunk_index": chunk.index, "stage": "generate",
                                "iteration": iteration, "draft": draft})

        emit("stage_started", {"chunk_index": chunk.index, "stage": "verify",
                               "iteration": iteration})
        report, vprompt, parse_failed = _verify_draft(
            spec, refs, chunk.text, draft, iteration, config, llm)
        verification_prompts.append(vprompt)
        reports.append(report)
        emit("stage_finished", {"chunk_index": chunk.index, "stage": "verify",
                                "iteration": iteration, "report": report_to_json(report)})

        if parse_failed:
            verification_failed = True
            accepted_index = iteration
            break
        if report.verdict == "accept":
            accepted_index = iteration
            break
        feedback = list(report.errors)

    if accepted_index is not None:
        # Includes the degraded case: an unverifiable draft is accepted but
        # carries the verification_failed flag.
        accepted = True
        returned_index = accepted_index
    else:
        # All iterations said revise: best score wins, latest among ties.
        accepted = False
        best = max(r.score for r in reports)
        returned_index = max(i for i, r in enumerate(reports) if r.score == best)

    translation = drafts[returned_index]
    record["reports"] = [report_to_json(r) for r in reports]
    record["accepted_draft_index"] = returned_index
    record["accepted"] = accepted
    record["verification_failed"] = verification_failed
    record["translation"] = translation
    record["numeral_warnings"] = check_numeral_preservation(chunk.text, translation)
    record["elapsed_ms"] = (time.monotonic() - started) * 1000.0
    return record


def _atomic_write_json(path: str, data: dict) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as f:
        json.dump(data, f, ensure_ascii=False, indent=2)
        f.write("\n")
    os.replace(tmp, path)


def deterministic_run_id(source: str, spec: TranslationSpec, config: PipelineConfig) -> str:
    basis = json.dumps(
        {"source": source, "spec": spec_to_json(spec), "config": config.to_json()},
        ensure_ascii=False, sort_keys=True,
    )
    return hashlib.sha256(basis.encode("utf-8")).hexdigest()[:12]


def translate_document(source: str, session: SpecSession, refs: ReferenceSet,
                       config: PipelineConfig, llm: Provider, *,
                       on_event=None, trace_path: str | None = None,
                       deterministic: bool = False,
                       run_id: str | None = None) -> tuple[str, dict]:
    """Translate a whole document chunk by chunk, threading memory between
    chunks. Returns (target document, trace).

    A generation failure aborts the run; the partial trace (marked
    incomplete, with the partial output) is written to trace_path when given
    and attached to the raised error.
    """
    if not session.locked:
        raise SpecNotLockedError("translation requires a locked specification")
    spec = session.spec
    emit = on_event or (lambda name, payload: None)

    if run_id is None:
        run_id = (deterministic_run_id(source, spec, config) if deterministic
                  else uuid.uuid4().hex[:12])

    chunks, chunk_warnings = chunk_document(source, config.max_chunk_chars)

    recorder = RecordingProvider(llm)
    memory = DocumentMemory()
    started_at = "" if deterministic else datetime.now(timezone.utc).isoformat()
    started = time.monotonic()

    trace: dict = {
        "run_id": run_id,
        "status": "running",
        "incomplete": True,
        "spec": spec_to_json(spec),
        "spec_markdown": render_markdown(spec),
        "config": config.to_json(),
        "judge_prompt_version": JUDGE_PROMPT_VERSION,
        "chunk_warnings": chunk_warnings,
        "chunks": [],
        "model_calls": [],
        "total_model_calls": 0,
        "timings": {"started_at": started_at, "finished_at": "", "elapsed_ms": 0.0},
        "output": "",
    }

    def finalize(status: str, output: str) -> None:
        trace["status"] = status
        trace["incomplete"] = status != "done"
        trace["output"] = output
        trace["model_calls"] = [asdict(c) for c in recorder.calls]
        if deterministic:
            for call in trace["model_calls"]:
                call["latency_ms"] = 0.0
            for chunk_record in trace["chunks"]:
                chunk_record["elapsed_ms"] = 0.0
        trace["total_model_calls"] = len(recorder.calls)
        trace["timings"]["finished_at"] = "" if deterministic else datetime.now(timezone.utc).isoformat()
        trace["timings"]["elapsed_ms"] = 0.0 if deterministic else (time.monotonic() - started) * 1000.0
        if trace_path:
            _atomic_write_json(trace_path, trace)

    translations: list[str] = []
    for chunk in chunks:
        memory_before = memory_to_json(memory)
        try:
            record = translate_chunk(chunk, spec, refs, memory, config, recorder, on_event=emit)
        except ChunkTranslationError as exc:
            partial = exc.trace or {}
            partial["memory_before"] = memory_before
            trace["chunks"].append(partial)
            finalize("failed", _join_output(chunks, translations))
            exc.trace = trace
            emit("run_done", {
                "run_id": run_id,
                "status": "failed",
                "output": trace["output"],
                "total_model_calls": trace["total_model_calls"],
                "all_accepted": False,
            })
            raise

        translations.append(record["translation"])

        emit("stage_started", {"chunk_index": chunk.index, "stage": "memory_update"})
        memory, memory_warnings = update_memory(
            memory, chunk.text, record["translation"], recorder,
            spec.source_lang, spec.target_lang)
        emit("stage_finished", {"chunk_index": chunk.index, "stage": "memory_update",
                                "memory": memory_to_json(memory)})

        record["memory_before"] = memory_before
        record["memory_after"] = memory_to_json(memory)
        record["memory_warnings"] = memory_warnings
        trace["chunks"].append(record)
        emit("chunk_done", {
            "chunk_index": chunk.index,
            "accepted": record["accepted"],
            "accepted_draft_index": record["accepted_draft_index"],
            "score": record["reports"][record["accepted_draft_index"]]["score"],
            "translation": record["translation"],
        })
        if trace_path:
            _atomic_write_json(trace_path, trace)

    output = _join_output(chunks, translations)
    finalize("done", output)
    emit("run_done", {
        "run_id": run_id,
        "status": "done",
        "output": output,
        "total_model_calls": trace["total_model_calls"],
        "all_accepted": all(c["accepted"] for c in trace["chunks"]),
    })
    return output, trace


def _join_output(chunks: list[Chunk], translations: list[str]) -> str:
    return "".join(chunk.separator + translation
                   for chunk, translation in zip(chunks, translations))

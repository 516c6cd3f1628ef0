"""HTTP facade: sessions, reference upload, spec dialogue, lock lifecycle,
asynchronous runs with server-sent events, and trace retrieval.

Sessions persist to disk (one directory each); provider API keys live only
in the in-memory session map and are re-entered after a restart.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Header, HTTPException, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import StreamingResponse

from . import dialogue
from .errors import (
    ChunkTranslationError,
    EmptyTableError,
    EncodingError,
    ProposalError,
    RefineError,
    SpecParseError,
    SpecValidationError,
    SpectransError,
)
from .llm import HttpProvider, Provider
from .pipeline import PipelineConfig, translate_document
from .references import (
    ReferenceSet,
    add_glossary,
    add_paired_examples,
    add_parallel_text,
    parse_pair_table,
    refs_from_json,
    refs_to_json,
    set_style_guide,
)
from .specification import (
    DRAFTING,
    LOCKED,
    SpecSession,
    TranslationSpec,
    render_markdown,
    spec_from_json,
    spec_to_json,
    validate_spec,
)

REFERENCE_KINDS = ("glossary", "examples", "parallel", "style")


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _error(status: int, code: str, message: str) -> HTTPException:
    return HTTPException(status_code=status, detail={"code": code, "message": message})


class RunState:
    """In-memory view of one run: status plus the ordered event log that the
    SSE route replays and tails."""

    def __init__(self, run_id: str, trace_path: Path):
        self.run_id = run_id
        self.trace_path = trace_path
        self.status = "queued"
        self.stale = False
        self.events: list[tuple[str, dict]] = []
        self.cond = threading.Condition()

    def emit(self, name: str, payload: dict) -> None:
        with self.cond:
            self.events.append((name, payload))
            if name == "run_done":
                self.status = payload.get("status", "done")
            self.cond.notify_all()

    def finished(self) -> bool:
        return self.status in ("done", "failed")


class SessionState:
    def __init__(self, session_id: str, spec_session: SpecSession, refs: ReferenceSet,
                 directory: Path, created_at: str):
        self.session_id = session_id
        self.spec_session = spec_session
        self.refs = refs
        self.directory = directory
        self.created_at = created_at
        self.updated_at = created_at
        self.api_key: str | None = None
        self.runs: dict[str, RunState] = {}
        self.lock = threading.RLock()

    def running_run(self) -> RunState | None:
        for run in self.runs.values():
            if run.status in ("queued", "running"):
                return run
        return None


class SessionStore:
    """Disk layout: <data_dir>/<session_id>/session.json, refs/references.json,
    runs/<run_id>/trace.json. API keys are never written anywhere here."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self.sessions: dict[str, SessionState] = {}
        self.lock = threading.Lock()
        self._load_existing()

    def _load_existing(self) -> None:
        for session_file in sorted(self.data_dir.glob("*/session.json")):
            try:
                data = json.loads(session_file.read_text(encoding="utf-8"))
                state = self._from_record(data, session_file.parent)
            except (OSError, ValueError, KeyError, SpecParseError):
                continue
            self.sessions[state.session_id] = state

    def _from_record(self, data: dict, directory: Path) -> SessionState:
        spec_session = SpecSession(spec_from_json(data["spec"]))
        spec_session.state = data.get("state", DRAFTING)
        spec_session.revision_history = [tuple(e) for e in data.get("revision_history", [])]
        spec_session.lock_generation = data.get("lock_generation", 0)

        refs = ReferenceSet()
        refs_file = directory / "refs" / "references.json"
        if refs_file.exists():
            refs = refs_from_json(json.loads(refs_file.read_text(encoding="utf-8")))

        state = SessionState(data["session_id"], spec_session, refs,
                             directory, data.get("created_at", _now()))
        state.updated_at = data.get("updated_at", state.created_at)
        for run_record in data.get("runs", []):
            run = RunState(run_record["run_id"],
                           directory / "runs" / run_record["run_id"] / "trace.json")
            # A run that was mid-flight when the process died cannot resume.
            run.status = run_record["status"] if run_record["status"] in ("done", "failed") else "failed"
            run.stale = run_record.get("stale", False)
            state.runs[run.run_id] = run
        return state

    def create(self, source_lang: str, target_lang: str) -> SessionState:
        session_id = uuid.uuid4().hex[:16]
        directory = self.data_dir / session_id
        directory.mkdir(parents=True)
        spec_session = SpecSession(TranslationSpec(source_lang=source_lang, target_lang=target_lang))
        state = SessionState(session_id, spec_session, ReferenceSet(), directory, _now())
        with self.lock:
            self.sessions[session_id] = state
        self.persist(state)
        return state

    def get(self, session_id: str) -> SessionState:
        state = self.sessions.get(session_id)
        if state is None:
            raise _error(404, "session_not_found", f"no session {session_id!r}")
        return state

    def persist(self, state: SessionState) -> None:
        state.updated_at = _now()
        record = {
            "session_id": state.session_id,
            "state": state.spec_session.state,
            "spec": spec_to_json(state.spec_session.spec),
            "revision_history": [list(e) for e in state.spec_session.revision_history],
            "lock_generation": state.spec_session.lock_generation,
            "runs": [
                {"run_id": r.run_id, "status": r.status, "stale": r.stale}
                for r in state.runs.values()
            ],
            "created_at": state.created_at,
            "updated_at": state.updated_at,
        }
        tmp = state.directory / "session.json.tmp"
        tmp.write_text(json.dumps(record, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
        os.replace(tmp, state.directory / "session.json")

        refs_dir = state.directory / "refs"
        refs_dir.mkdir(exist_ok=True)
        refs_tmp = refs_dir / "references.json.tmp"
        refs_tmp.write_text(json.dumps(refs_to_json(state.refs), ensure_ascii=False, indent=2) + "\n",
                            encoding="utf-8")
        os.replace(refs_tmp, refs_dir / "references.json")


def default_provider_factory(api_key: str) -> Provider:
    """Build the live provider from environment configuration."""
    endpoint = os.environ.get("SPECTRANS_ENDPOINT", "")
    model = os.environ.get("SPECTRANS_MODEL", "")
    if not endpoint or not model:
        raise _error(503, "provider_unconfigured",
                     "set SPECTRANS_ENDPOINT and SPECTRANS_MODEL to enable the live provider")
    return HttpProvider(
        endpoint=endpoint, model=model, api_key=api_key,
        auth_header=os.environ.get("SPECTRANS_AUTH_HEADER", "Authorization"),
    )


def create_app(data_dir: str | Path, provider_factory=None) -> FastAPI:
    store = SessionStore(data_dir)
    make_provider = provider_factory or default_provider_factory

    app = FastAPI(title="translation workbench service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"], allow_methods=["*"], allow_headers=["*"],
    )
    app.state.store = store

    def resolve_provider(state: SessionState, header_key: str | None) -> Provider:
        if header_key:
            state.api_key = header_key
        if not state.api_key:
            raise _error(401, "missing_key",
                         "supply a provider API key via the X-Provider-Key header")
        return make_provider(state.api_key)

    def snapshot(state: SessionState) -> dict:
        spec = state.spec_session.spec
        violations = validate_spec(spec)
        return {
            "session_id": state.session_id,
            "state": state.spec_session.state,
            "spec": spec_to_json(spec),
            "spec_markdown": render_markdown(spec) if not violations else None,
            "violations": [{"field": v.field, "reason": v.reason} for v in violations],
            "references": refs_to_json(state.refs),
            "revision_history": [list(e) for e in state.spec_session.revision_history],
            "runs": [
                {"run_id": r.run_id, "status": r.status, "stale": r.stale}
                for r in state.runs.values()
            ],
            "created_at": state.created_at,
            "updated_at": state.updated_at,
        }

    @app.post("/sessions", status_code=201)
    def create_session(body: dict):
        source_lang = str(body.get("source_lang", "")).strip()
        target_lang = str(body.get("target_lang", "")).strip()
        if not source_lang or not target_lang:
            raise _error(422, "missing_languages",
                         "body must carry non-empty source_lang and target_lang")
        state = store.create(source_lang, target_lang)
        return {"session_id": state.session_id}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        state = store.get(session_id)
        with state.lock:
            return snapshot(state)

    @app.post("/sessions/{session_id}/references")
    async def upload_reference(session_id: str, request: Request,
                               kind: str = Query(...), name: str = Query("")):
        state = store.get(session_id)
        if kind not in REFERENCE_KINDS:
            raise _error(422, "unknown_reference_kind",
                         f"kind must be one of {', '.join(REFERENCE_KINDS)}")
        body = await request.body()
        with state.lock:
            try:
                if kind == "glossary":
                    pairs, parse_warnings = parse_pair_table(body, "glossary")
                    state.refs, merge_warnings = add_glossary(state.refs, pairs)
                    warnings = parse_warnings + merge_warnings
                elif kind == "examples":
                    pairs, parse_warnings = parse_pair_table(body, "examples")
                    state.refs, merge_warnings = add_paired_examples(state.refs, pairs)
                    warnings = parse_warnings + merge_warnings
                elif kind == "parallel":
                    text = body.decode("utf-8")
                    label = name or f"parallel-{len(state.refs.parallel_texts) + 1}"
                    state.refs = add_parallel_text(state.refs, label, text)
                    warnings = []
                else:
                    state.refs = set_style_guide(state.refs, body.decode("utf-8"))
                    warnings = []
            except (EncodingError, EmptyTableError, UnicodeDecodeError) as exc:
                raise _error(422, "invalid_reference", str(exc))
            store.persist(state)
            return {"warnings": warnings, "references": refs_to_json(state.refs)}

    @app.post("/sessions/{session_id}/spec/propose")
    def propose(session_id: str, body: dict,
                x_provider_key: str | None = Header(default=None)):
        state = store.get(session_id)
        source = body.get("source", "")
        if not isinstance(source, str) or not source.strip():
            raise _error(422, "empty_source", "body must carry a non-empty source")
        with state.lock:
            if state.spec_session.state == LOCKED:
                raise _error(409, "spec_locked", "unlock the spec before proposing")
            provider = resolve_provider(state, x_provider_key)
            spec = state.spec_session.spec
            try:
                proposed, warnings = dialogue.propose_spec(
                    source, state.refs, spec.source_lang, spec.target_lang, provider)
            except ProposalError as exc:
                raise _error(502, "proposal_failed", str(exc))
            state.spec_session.update_spec(proposed, "proposed from source")
            store.persist(state)
            return {
                "spec": spec_to_json(proposed),
                "markdown": render_markdown(proposed),
                "warnings": warnings,
            }

    @app.post("/sessions/{session_id}/spec/refine")
    def refine(session_id: str, body: dict,
               x_provider_key: str | None = Header(default=None)):
        state = store.get(session_id)
        instruction = body.get("instruction", "")
        if not isinstance(instruction, str) or not instruction.strip():
            raise _error(422, "empty_instruction", "body must carry a non-empty instruction")
        with state.lock:
            if state.spec_session.state == LOCKED:
                raise _error(409, "spec_locked", "unlock the spec before refining")
            provider = resolve_provider(state, x_provider_key)
            try:
                revised, diff, warnings = dialogue.refine_spec(
                    state.spec_session.spec, instruction, provider)
            except RefineError as exc:
                raise _error(502, "refine_failed", str(exc))
            state.spec_session.update_spec(revised, f"refined: {instruction[:120]}")
            store.persist(state)
            return {
                "spec": spec_to_json(revised),
                "markdown": render_markdown(revised),
                "diff": [list(entry) for entry in diff],
                "warnings": warnings,
            }

    @app.put("/sessions/{session_id}/spec")
    def edit_spec(session_id: str, body: dict):
        state = store.get(session_id)
        with state.lock:
            if state.spec_session.state == LOCKED:
                raise _error(409, "spec_locked", "unlock the spec before editing")
            try:
                spec = spec_from_json(body)
            except SpecParseError as exc:
                raise _error(422, "invalid_spec", str(exc))
            state.spec_session.update_spec(spec, "direct edit")
            store.persist(state)
            violations = validate_spec(spec)
            return {
                "spec": spec_to_json(spec),
                "markdown": render_markdown(spec) if not violations else None,
                "violations": [{"field": v.field, "reason": v.reason} for v in violations],
            }

    @app.post("/sessions/{session_id}/spec/lock")
    def lock_spec(session_id: str):
        state = store.get(session_id)
        with state.lock:
            if state.spec_session.state == LOCKED:
                raise _error(409, "already_locked", "spec is already locked")
            try:
                state.spec_session.lock()
            except SpecValidationError as exc:
                raise _error(422, "invalid_spec", str(exc))
            store.persist(state)
            return {"state": LOCKED}

    @app.post("/sessions/{session_id}/spec/unlock")
    def unlock_spec(session_id: str):
        state = store.get(session_id)
        with state.lock:
            if state.spec_session.state != LOCKED:
                raise _error(409, "not_locked", "spec is not locked")
            state.spec_session.unlock()
            # Traces produced under the old lock no longer match the spec.
            for run in state.runs.values():
                run.stale = True
            store.persist(state)
            return {"state": DRAFTING}

    def run_worker(state: SessionState, run: RunState, source: str,
                   config: PipelineConfig, provider: Provider) -> None:
        run.status = "running"
        try:
            translate_document(
                source, state.spec_session, state.refs, config, provider,
                on_event=run.emit, trace_path=str(run.trace_path), run_id=run.run_id,
            )
        except ChunkTranslationError:
            pass  # trace written and run_done(failed) emitted by the pipeline
        except SpectransError as exc:
            run.emit("run_done", {"run_id": run.run_id, "status": "failed",
                                  "error": str(exc)})
        except Exception as exc:  # noqa: BLE001 - worker thread must not die silently
            run.emit("run_done", {"run_id": run.run_id, "status": "failed",
                                  "error": f"unexpected: {exc}"})
        finally:
            if not run.finished():
                run.status = "done" if run.trace_path.exists() else "failed"
            with state.lock:
                store.persist(state)

    @app.post("/sessions/{session_id}/runs", status_code=202)
    def start_run(session_id: str, body: dict,
                  x_provider_key: str | None = Header(default=None)):
        state = store.get(session_id)
        source = body.get("source", "")
        if not isinstance(source, str) or not source.strip():
            raise _error(422, "empty_source", "body must carry a non-empty source")
        overrides = body.get("config", {})
        if not isinstance(overrides, dict):
            raise _error(422, "invalid_config", "config must be an object")
        with state.lock:
            if state.spec_session.state != LOCKED:
                raise _error(409, "spec_not_locked", "lock the spec before running")
            if state.running_run() is not None:
                raise _error(409, "run_in_progress", "another run is already active")
            provider = resolve_provider(state, x_provider_key)
            try:
                config = PipelineConfig(**overrides)
            except (TypeError, ValueError) as exc:
                raise _error(422, "invalid_config", str(exc))
            run_id = uuid.uuid4().hex[:12]
            run_dir = state.directory / "runs" / run_id
            run_dir.mkdir(parents=True)
            run = RunState(run_id, run_dir / "trace.json")
            state.runs[run_id] = run
            store.persist(state)
        thread = threading.Thread(
            target=run_worker, args=(state, run, source, config, provider), daemon=True)
        thread.start()
        return {"run_id": run_id}

    def get_run(state: SessionState, run_id: str) -> RunState:
        run = state.runs.get(run_id)
        if run is None:
            raise _error(404, "run_not_found", f"no run {run_id!r}")
        return run

    @app.get("/sessions/{session_id}/runs/{run_id}/events")
    def stream_events(session_id: str, run_id: str):
        state = store.get(session_id)
        run = get_run(state, run_id)

        def generate():
            index = 0
            # A run reloaded from disk has no event log left; synthesize the
            # terminal event from its recorded status.
            if not run.events and run.finished():
                payload = {"run_id": run.run_id, "status": run.status, "replayed": True}
                yield f"event: run_done\ndata: {json.dumps(payload, ensure_ascii=False)}\n\n"
                return
            while True:
                with run.cond:
                    while index >= len(run.events) and not run.finished():
                        run.cond.wait(timeout=30.0)
                    batch = run.events[index:]
                    index += len(batch)
                for name, payload in batch:
                    yield f"event: {name}\ndata: {json.dumps(payload, ensure_ascii=False)}\n\n"
                if not batch and run.finished():
                    return
                if any(name == "run_done" for name, _ in batch):
                    return

        return StreamingResponse(generate(), media_type="text/event-stream")

    @app.get("/sessions/{session_id}/runs/{run_id}/trace")
    def get_trace(session_id: str, run_id: str):
        state = store.get(session_id)
        run = get_run(state, run_id)
        if not run.trace_path.exists():
            raise _error(404, "trace_not_ready", "no trace has been written for this run yet")
        return json.loads(run.trace_path.read_text(encoding="utf-8"))

    return app


def create_default_app() -> FastAPI:
    """Factory for `uvicorn spectrans.service:create_default_app --factory`."""
    return create_app(os.environ.get("SPECTRANS_DATA_DIR", "./spectrans-data"))

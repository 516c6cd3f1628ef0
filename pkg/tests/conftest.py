"""Shared fixtures: spec factories, scripted providers, and a local HTTP
stub for exercising the live-provider client offline."""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest

from spectrans.specification import Audience, Loyalty, Register, TranslationSpec


def pytest_runtest_logreport(report):
    # One visible pass/fail line per acceptance criterion.
    if report.when == "call" and "test_acceptance" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        outcome = "PASS" if report.passed else "FAIL"
        print(f"\n[acceptance] {name}: {outcome}", flush=True)


@pytest.fixture
def spec_ja_en() -> TranslationSpec:
    return TranslationSpec(
        source_lang="ja",
        target_lang="en",
        skopos="Publishable English rendering of a Japanese text.",
        text_type="informative",
        house_mode="covert",
        loyalty=Loyalty(0.7, 0.9, 0.7, 0.5),
        domestication_axis=0.4,
        audience=Audience(description="General adult readers", expertise="non-specialist"),
        register=Register(formality="neutral", voice="active where natural"),
        genre="feature journalism",
        terminology_guidance="Keep institutional names official.",
        style_decisions="Serial comma; sentence case headings.",
        preserve=("personal names", "figures"),
        localize=("date formats",),
        avoid=("translationese",),
    )


def identify_reply() -> str:
    return json.dumps({
        "skopos": "inform readers",
        "audience": "general readers",
        "register": "neutral",
        "genre": "news",
        "stance": "descriptive",
        "notes": "none",
    })


def memory_reply(new_terms=(), summary=None) -> str:
    words = summary if summary is not None else " ".join(
        f"word{i}" for i in range(60))
    return json.dumps({"new_terms": [list(t) for t in new_terms], "summary": words})


def clean_script() -> dict:
    """Cycle-form script: every chunk gets one clean accept."""
    return {
        "identify": {"cycle": [identify_reply()]},
        "generate": {"cycle": ["A scripted translation of the chunk."]},
        "verify": {"cycle": ["[]"]},
        "memory_update": {"cycle": [memory_reply()]},
    }


class _StubState:
    def __init__(self):
        self.requests: list[dict] = []
        self.plan: list = []  # per-request: int status or ("ok", text) tuple
        self.lock = threading.Lock()


class _StubHandler(BaseHTTPRequestHandler):
    state: _StubState = None

    def do_POST(self):
        length = int(self.headers.get("Content-Length", 0))
        body = json.loads(self.rfile.read(length) or b"{}")
        with self.state.lock:
            self.state.requests.append({
                "body": body,
                "headers": {k: v for k, v in self.headers.items()},
            })
            step = self.state.plan.pop(0) if self.state.plan else ("ok", "stub reply")

        if isinstance(step, int):
            self.send_response(step)
            self.send_header("Content-Type", "application/json")
            self.end_headers()
            self.wfile.write(b'{"error": "scripted failure"}')
            return

        _, text = step
        payload = {
            "choices": [{"message": {"role": "assistant", "content": text}}],
            "usage": {"prompt_tokens": 7, "completion_tokens": 3},
        }
        data = json.dumps(payload).encode("utf-8")
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def log_message(self, *args):
        pass


@pytest.fixture
def http_stub():
    state = _StubState()
    handler = type("Handler", (_StubHandler,), {"state": state})
    server = HTTPServer(("127.0.0.1", 0), handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    url = f"http://127.0.0.1:{server.server_address[1]}/v1/chat/completions"
    yield url, state
    server.shutdown()
    server.server_close()

"""Model providers behind one narrow interface: a deterministic scripted
provider for offline work and an OpenAI-compatible chat-completion client.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from pathlib import Path

import httpx

from .errors import ProviderError, RateLimitError, ScriptExhaustedError

STAGE_TAGS = ("spec_propose", "spec_refine", "identify", "generate", "verify", "memory_update")

DEFAULT_TEMPERATURES = {
    "spec_propose": 0.7,
    "spec_refine": 0.7,
    "identify": 0.0,
    "generate": 0.3,
    "verify": 0.0,
    "memory_update": 0.0,
}

DEFAULT_TIMEOUT_S = 120.0
DEFAULT_MAX_RETRIES = 2


@dataclass(frozen=True)
class ModelRequest:
    stage_tag: str
    system: str
    user: str
    temperature: float
    max_tokens: int | None = None

    def __post_init__(self):
        if self.stage_tag not in STAGE_TAGS:
            raise ValueError(f"unknown stage_tag {self.stage_tag!r}")
        if not self.user:
            raise ValueError("user message must be non-empty")
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError(f"temperature must be within [0, 2], got {self.temperature}")


@dataclass(frozen=True)
class ModelReply:
    text: str
    input_tokens: int = 0
    output_tokens: int = 0
    latency_ms: float = 0.0


class Provider:
    """Interface: one blocking call per request."""

    def complete(self, request: ModelRequest) -> ModelReply:
        raise NotImplementedError


class MockProvider(Provider):
    """Replays scripted replies keyed by stage tag. Fully deterministic.

    Script shapes per stage tag:
      - list of strings: consumed one per call, exhausting raises
      - {"cycle": [...]}: repeats the list forever
    A top-level "sequence" list is the fallback for stage tags with no entry
    of their own. A bare list as the whole script behaves as {"sequence": [...]}.
    """

    def __init__(self, script: dict | list):
        if isinstance(script, list):
            script = {"sequence": script}
        self._script = script
        self._positions: dict[str, int] = {}

    @classmethod
    def from_file(cls, path: str | Path) -> MockProvider:
        with open(path, encoding="utf-8") as f:
            return cls(json.load(f))

    def _next(self, key: str) -> str:
        entry = self._script[key]
        pos = self._positions.get(key, 0)
        if isinstance(entry, dict) and "cycle" in entry:
            replies = entry["cycle"]
            reply = replies[pos % len(replies)]
        else:
            replies = entry
            if pos >= len(replies):
                raise ScriptExhaustedError(f"mock script for {key!r} exhausted after {pos} replies")
            reply = replies[pos]
        self._positions[key] = pos + 1
        return reply

    def complete(self, request: ModelRequest) -> ModelReply:
        if request.stage_tag in self._script:
            key = request.stage_tag
        elif "sequence" in self._script:
            key = "sequence"
        else:
            raise ScriptExhaustedError(
                f"mock script has no entry for stage {request.stage_tag!r} and no 'sequence' fallback"
            )
        return ModelReply(text=self._next(key))


class HttpProvider(Provider):
    """OpenAI-compatible chat-completion client.

    The API key lives in memory only: it is excluded from repr and must never
    be logged or written to disk by callers. Transport errors, 429s, and 5xx
    responses are retried with exponential backoff plus jitter.
    """

    def __init__(self, endpoint: str, model: str, api_key: str,
                 auth_header: str = "Authorization",
                 timeout_s: float = DEFAULT_TIMEOUT_S,
                 max_retries: int = DEFAULT_MAX_RETRIES,
                 backoff_base_s: float = 1.0,
                 rng: random.Random | None = None):
        self.endpoint = endpoint
        self.model = model
        self._api_key = api_key
        self.auth_header = auth_header
        self.timeout_s = timeout_s
        self.max_retries = max_retries
        self.backoff_base_s = backoff_base_s
        self._rng = rng or random.Random()

    def __repr__(self) -> str:
        return f"HttpProvider(endpoint={self.endpoint!r}, model={self.model!r})"

    def _headers(self) -> dict[str, str]:
        if self.auth_header.lower() == "authorization":
            return {"Authorization": f"Bearer {self._api_key}"}
        return {self.auth_header: self._api_key}

    def complete(self, request: ModelRequest) -> ModelReply:
        payload: dict = {
            "model": self.model,
            "messages": [
                {"role": "system", "content": request.system},
                {"role": "user", "content": request.user},
            ],
            "temperature": request.temperature,
        }
        if request.max_tokens is not None:
            payload["max_tokens"] = request.max_tokens

        last_error: Exception | None = None
        last_status: int | None = None
        for attempt in range(self.max_retries + 1):
            if attempt:
                delay = self.backoff_base_s * (2 ** (attempt - 1))
                time.sleep(delay + self._rng.uniform(0, delay / 2))
            started = time.monotonic()
            try:
                response = httpx.post(self.endpoint, json=payload,
                                      headers=self._headers(), timeout=self.timeout_s)
            except httpx.HTTPError as exc:
                last_error, last_status = exc, None
                continue
            if response.status_code == 429 or response.status_code >= 500:
                last_error, last_status = None, response.status_code
                continue
            if response.status_code != 200:
                raise ProviderError(f"provider returned HTTP {response.status_code}: {response.text[:500]}")
            return self._parse(response, started)

        if last_status == 429:
            raise RateLimitError(f"rate limited after {self.max_retries + 1} attempts")
        if last_status is not None:
            raise ProviderError(f"provider returned HTTP {last_status} after {self.max_retries + 1} attempts")
        raise ProviderError(f"transport failure after {self.max_retries + 1} attempts: {last_error}")

    def _parse(self, response: httpx.Response, started: float) -> ModelReply:
        latency_ms = (time.monotonic() - started) * 1000.0
        try:
            body = response.json()
            text = body["choices"][0]["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError) as exc:
            raise ProviderError(f"malformed provider response: {exc}") from exc
        usage = body.get("usage") or {}
        return ModelReply(
            text=text,
            input_tokens=int(usage.get("prompt_tokens", 0) or 0),
            output_tokens=int(usage.get("completion_tokens", 0) or 0),
            latency_ms=latency_ms,
        )


@dataclass
class CallRecord:
    stage_tag: str
    system: str
    user: str
    temperature: float
    reply: str
    input_tokens: int
    output_tokens: int
    latency_ms: float


class RecordingProvider(Provider):
    """Wraps any provider and records every exchange, for run traces."""

    def __init__(self, inner: Provider):
        self.inner = inner
        self.calls: list[CallRecord] = []

    def complete(self, request: ModelRequest) -> ModelReply:
        reply = self.inner.complete(request)
        self.calls.append(CallRecord(
            stage_tag=request.stage_tag,
            system=request.system,
            user=request.user,
            temperature=request.temperature,
            reply=reply.text,
            input_tokens=reply.input_tokens,
            output_tokens=reply.output_tokens,
            latency_ms=reply.latency_ms,
        ))
        return reply

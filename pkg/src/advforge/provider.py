"""Client side of the candidate-provider wire protocol, plus the in-process
identity stub used by tests and provider-free runs.

Wire protocol (shared by the paraphrase and distractor attacks), line-delimited
UTF-8 JSON over subprocess standard streams or HTTP POST:

  handshake  provider's first line:
             {"hello": {"protocol": 1, "tasks": ["paraphrase", ...]}}
  request    {"id": ..., "task": "paraphrase", "text": ..., "template"?: ..., "beam"?: ...}
             {"id": ..., "task": "distractors", "mode": "extract"|"generate",
              "passage": ..., "question": ..., "answer": ..., "beam": ...}
  response   {"id": <matching>, "candidates": [{"text": ..., "score": ...}, ...]}
  error      any line of the form {"error": ...} aborts the run.

Over HTTP, GET fetches the handshake record and each POST body is one request
line whose response body is the matching response line.
"""

from __future__ import annotations

import json
import queue
import shlex
import subprocess
import threading
import urllib.error
import urllib.request
from dataclasses import dataclass

PROTOCOL_VERSION = 1
DEFAULT_TIMEOUT_MS = 30_000


class ProviderError(Exception):
    """Transport failure or wire-protocol violation; aborts the whole run."""


@dataclass(frozen=True)
class CandidateSpan:
    """One scored candidate returned by a provider (higher score is better)."""

    text: str
    score: float


def _parse_candidates(payload: dict, line: str) -> list[CandidateSpan]:
    raw = payload.get("candidates")
    if not isinstance(raw, list):
        raise ProviderError(f"response without candidates list: {line.strip()!r}")
    out = []
    for item in raw:
        if (
            not isinstance(item, dict)
            or not isinstance(item.get("text"), str)
            or not isinstance(item.get("score"), (int, float))
        ):
            raise ProviderError(f"malformed candidate in response: {line.strip()!r}")
        out.append(CandidateSpan(text=item["text"], score=float(item["score"])))
    return out


class _StdioTransport:
    """One provider subprocess; a reader thread feeds a queue so every read
    honors the timeout."""

    def __init__(self, command: str, timeout_ms: int):
        self.timeout = timeout_ms / 1000.0
        try:
            self.proc = subprocess.Popen(
                shlex.split(command),
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                encoding="utf-8",
                bufsize=1,
            )
        except OSError as exc:
            raise ProviderError(f"cannot start provider {command!r}: {exc}") from exc
        self._lines: queue.Queue[str | None] = queue.Queue()
        self._reader = threading.Thread(target=self._pump, daemon=True)
        self._reader.start()

    def _pump(self) -> None:
        assert self.proc.stdout is not None
        for line in self.proc.stdout:
            self._lines.put(line)
        self._lines.put(None)

    def readline(self) -> str:
        try:
            line = self._lines.get(timeout=self.timeout)
        except queue.Empty:
            raise ProviderError(f"provider timed out after {self.timeout:.1f}s waiting for a line")
        if line is None:
            raise ProviderError("provider closed its output stream")
        return line

    def writeline(self, line: str) -> None:
        assert self.proc.stdin is not None
        try:
            self.proc.stdin.write(line + "\n")
            self.proc.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            raise ProviderError(f"provider pipe closed: {exc}") from exc

    def close(self) -> None:
        try:
            if self.proc.stdin:
                self.proc.stdin.close()
            self.proc.wait(timeout=5)
        except (OSError, subprocess.TimeoutExpired):
            self.proc.kill()


class _HttpTransport:
    def __init__(self, url: str, timeout_ms: int):
        self.url = url
        self.timeout = timeout_ms / 1000.0

    def fetch_hello(self) -> str:
        try:
            with urllib.request.urlopen(self.url, timeout=self.timeout) as resp:
                return resp.read().decode("utf-8")
        except (urllib.error.URLError, OSError) as exc:
            raise ProviderError(f"handshake request to {self.url} failed: {exc}") from exc

    def roundtrip(self, line: str) -> str:
        req = urllib.request.Request(
            self.url,
            data=line.encode("utf-8"),
            headers={"Content-Type": "application/json"},
        )
        try:
            with urllib.request.urlopen(req, timeout=self.timeout) as resp:
                return resp.read().decode("utf-8")
        except (urllib.error.URLError, OSError) as exc:
            raise ProviderError(f"request to {self.url} failed: {exc}") from exc


def _parse_hello(line: str) -> frozenset[str]:
    try:
        payload = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ProviderError(f"handshake is not valid JSON: {line.strip()!r}") from exc
    if not isinstance(payload, dict) or "hello" not in payload:
        raise ProviderError(f"expected a hello line first, got: {line.strip()!r}")
    hello = payload["hello"]
    if not isinstance(hello, dict) or hello.get("protocol") != PROTOCOL_VERSION:
        raise ProviderError(
            f"unsupported protocol in handshake (need {PROTOCOL_VERSION}): {line.strip()!r}"
        )
    tasks = hello.get("tasks")
    if not isinstance(tasks, list) or not all(isinstance(t, str) for t in tasks):
        raise ProviderError(f"handshake without a task list: {line.strip()!r}")
    return frozenset(tasks)


class WireProvider:
    """Blocking one-in-flight client over either transport.

    Spec strings: "exec:<command line>" or "http:<url>".
    """

    def __init__(self, spec: str, timeout_ms: int = DEFAULT_TIMEOUT_MS):
        self.spec = spec
        if spec.startswith("exec:"):
            self._stdio: _StdioTransport | None = _StdioTransport(spec[5:], timeout_ms)
            self._http: _HttpTransport | None = None
            hello_line = self._stdio.readline()
        elif spec.startswith("http:"):
            self._stdio = None
            self._http = _HttpTransport(spec[5:] if spec[5:].startswith(("http://", "https://"))
                                        else spec, timeout_ms)
            hello_line = self._http.fetch_hello()
        else:
            raise ProviderError(f"unknown provider spec {spec!r} (use exec:..., http:..., identity)")
        self.tasks = _parse_hello(hello_line)

    def _roundtrip(self, request: dict) -> list[CandidateSpan]:
        line = json.dumps(request, ensure_ascii=False)
        if self._stdio is not None:
            self._stdio.writeline(line)
            reply = self._stdio.readline()
        else:
            assert self._http is not None
            reply = self._http.roundtrip(line)
        try:
            payload = json.loads(reply)
        except json.JSONDecodeError as exc:
            raise ProviderError(f"response is not valid JSON: {reply.strip()!r}") from exc
        if not isinstance(payload, dict):
            raise ProviderError(f"response is not an object: {reply.strip()!r}")
        if "error" in payload:
            raise ProviderError(f"provider reported an error: {reply.strip()!r}")
        if payload.get("id") != request["id"]:
            raise ProviderError(
                f"response id {payload.get('id')!r} does not match request id {request['id']!r}"
            )
        return _parse_candidates(payload, reply)

    def paraphrase(self, text: str, request_id: str, template: str | None = None,
                   beam: int | None = None) -> list[CandidateSpan]:
        if "paraphrase" not in self.tasks:
            raise ProviderError(f"provider {self.spec!r} does not advertise the paraphrase task")
        request: dict = {"id": request_id, "task": "paraphrase", "text": text}
        if template is not None:
            request["template"] = template
        if beam is not None:
            request["beam"] = beam
        return self._roundtrip(request)

    def distractors(self, passage: str, question: str, answer: str, mode: str,
                    beam: int, request_id: str) -> list[CandidateSpan]:
        if "distractors" not in self.tasks:
            raise ProviderError(f"provider {self.spec!r} does not advertise the distractors task")
        return self._roundtrip(
            {
                "id": request_id,
                "task": "distractors",
                "mode": mode,
                "passage": passage,
                "question": question,
                "answer": answer,
                "beam": beam,
            }
        )

    def close(self) -> None:
        if self._stdio is not None:
            self._stdio.close()


class IdentityProvider:
    """In-process stub: paraphrase echoes its input as the sole candidate;
    distractors returns the passage's sentences scored by position. Lets the
    whole pipeline run deterministically with no external process."""

    spec = "identity"
    tasks = frozenset({"paraphrase", "distractors"})

    def paraphrase(self, text: str, request_id: str, template: str | None = None,
                   beam: int | None = None) -> list[CandidateSpan]:
        return [CandidateSpan(text=text, score=1.0)]

    def distractors(self, passage: str, question: str, answer: str, mode: str,
                    beam: int, request_id: str) -> list[CandidateSpan]:
        from . import textkit  # local import keeps this stub dependency-light

        spans = textkit.split_sentences(passage)
        candidates = [
            CandidateSpan(text=span.text_of(passage), score=1.0 / (i + 1))
            for i, span in enumerate(spans)
        ]
        return candidates[: max(beam, 0)]

    def close(self) -> None:  # nothing to release
        pass


def open_provider(spec: str, timeout_ms: int = DEFAULT_TIMEOUT_MS):
    """Resolve a --provider spec string: exec:<cmd>, http:<url>, or identity."""
    if spec == "identity":
        return IdentityProvider()
    return WireProvider(spec, timeout_ms=timeout_ms)

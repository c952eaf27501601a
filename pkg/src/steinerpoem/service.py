"""HTTP backend for the composer UI: sessions, line edits, validation, export.

Endpoints (JSON bodies; errors are { "error": message } with 404 or 422):
  POST /sessions                         create a session
  GET  /sessions                         list session summaries
  GET  /sessions/{id}                    full session state
  PUT  /sessions/{id}/lines/{stanza}/{line}   replace one draft line
  POST /sessions/{id}/validate           validate the current draft
  GET  /sessions/{id}/export?format=poem|dot|tikz|json

Sessions persist as one JSON file each under the session directory and are
reloaded on startup, so a restart loses nothing.  Mutation of a session is
serialized behind a per-session lock; distinct sessions proceed in parallel.
"""

from __future__ import annotations

import datetime
import json
import os
import secrets
import threading
from typing import Any, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from .graphs import export_graph, to_decomposition
from .interchange import system_to_doc
from .orders import InadmissibleOrderError
from .poems import RULE_FLAGS, KeywordMap, Poem, PoemLine, Token, normalize_word, split_tokens
from .resolution import Resolution, ResolvableSearchError
from .scaffold import scaffold_with_design
from .systems import TripleSystem
from .validation import validate_poem


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


class CreateSessionRequest(BaseModel):
    keywords: list[str]
    variant: str = "relaxed"
    seed: int = 0
    rules: list[str] = []


class UpdateLineRequest(BaseModel):
    text: str


def _now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


def _tokenize_line(text: str, keywords: KeywordMap) -> tuple[Token, ...]:
    tokens = []
    for raw in split_tokens(text):
        if normalize_word(raw) == "":
            continue
        tokens.append(Token(text=raw, point=keywords.point_of(raw)))
    return tuple(tokens)


class Session:
    """One composition in progress; all mutation happens under self.lock."""

    def __init__(self, data: dict[str, Any], system: TripleSystem,
                 resolution: Optional[Resolution]):
        self.lock = threading.Lock()
        self.data = data
        self.system = system
        self.resolution = resolution

    @property
    def id(self) -> str:
        return self.data["id"]

    def keyword_map(self) -> KeywordMap:
        return KeywordMap.build(self.data["keywords"])

    def poem(self) -> Poem:
        """Build the draft as a Poem value, bypassing the file format."""
        keywords = self.keyword_map()
        stanzas = []
        poem_line_no = 0
        for si, stanza_texts in enumerate(self.data["draft"], start=1):
            stanza = []
            for li, text in enumerate(stanza_texts, start=1):
                poem_line_no += 1
                stanza.append(
                    PoemLine(
                        source_text=text,
                        tokens=_tokenize_line(text, keywords),
                        stanza_no=si,
                        line_no=li,
                        poem_line_no=poem_line_no,
                        source_line_no=poem_line_no,
                    )
                )
            stanzas.append(tuple(stanza))
        return Poem(
            variant=self.data["variant"],
            keywords=keywords,
            stanzas=tuple(stanzas),
            rules=tuple(self.data.get("rules", [])),
            title=self.data.get("title"),
        )

    def poem_text(self) -> str:
        parts = [
            f"#! keywords: {', '.join(self.data['keywords'])}",
            f"#! variant: {self.data['variant']}",
        ]
        if self.data.get("rules"):
            parts.append(f"#! rules: {', '.join(self.data['rules'])}")
        for stanza_texts in self.data["draft"]:
            parts.append("")
            parts.extend(stanza_texts)
        return "\n".join(parts) + "\n"

    def public(self) -> dict[str, Any]:
        doc = dict(self.data)
        doc["system"] = system_to_doc(
            self.system, self.data["keywords"], self.resolution
        )
        return doc

    def summary(self) -> dict[str, Any]:
        return {
            "id": self.data["id"],
            "variant": self.data["variant"],
            "order": len(self.data["keywords"]),
            "keywords": self.data["keywords"],
            "revision": self.data["revision"],
            "updated_at": self.data["updated_at"],
        }


class SessionStore:
    """Registry of sessions backed by one JSON file per session."""

    def __init__(self, session_dir: str):
        self.session_dir = session_dir
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        os.makedirs(session_dir, exist_ok=True)
        self._load_all()

    def _path(self, sid: str) -> str:
        return os.path.join(self.session_dir, f"{sid}.json")

    def _load_all(self) -> None:
        for name in sorted(os.listdir(self.session_dir)):
            if not name.endswith(".json"):
                continue
            with open(os.path.join(self.session_dir, name), encoding="utf-8") as fh:
                data = json.load(fh)
            system = TripleSystem.build(
                data["system"]["order"],
                [tuple(t) for t in data["system"]["triples"]],
            )
            resolution = None
            classes = data["system"].get("classes")
            if classes:
                resolution = Resolution.build(
                    system,
                    [[system.triples[i] for i in cl] for cl in classes],
                )
            stored = {k: v for k, v in data.items() if k != "system"}
            session = Session(stored, system, resolution)
            self._sessions[session.id] = session

    def persist(self, session: Session) -> None:
        doc = dict(session.data)
        doc["system"] = system_to_doc(
            session.system, session.data["keywords"], session.resolution
        )
        path = self._path(session.id)
        tmp = f"{path}.tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, ensure_ascii=False)
            fh.write("\n")
        os.replace(tmp, path)

    def create(self, req: CreateSessionRequest) -> Session:
        for flag in req.rules:
            if flag not in RULE_FLAGS:
                raise ApiError(422, f"unknown rule flag {flag!r}")
        try:
            poem, system, resolution = scaffold_with_design(
                req.keywords, variant=req.variant, seed=req.seed
            )
        except (InadmissibleOrderError, ValueError) as exc:
            raise ApiError(422, str(exc)) from None
        except ResolvableSearchError as exc:
            raise ApiError(422, str(exc)) from None
        sid = secrets.token_urlsafe(16)
        now = _now()
        data = {
            "id": sid,
            "keywords": list(poem.keywords.words),
            "variant": req.variant,
            "rules": list(req.rules),
            "seed": req.seed,
            "revision": 0,
            "created_at": now,
            "updated_at": now,
            "draft": [
                [line.source_text for line in stanza] for stanza in poem.stanzas
            ],
        }
        session = Session(data, system, resolution)
        with self._lock:
            self._sessions[sid] = session
        self.persist(session)
        return session

    def get(self, sid: str) -> Session:
        with self._lock:
            session = self._sessions.get(sid)
        if session is None:
            raise ApiError(404, f"no such session: {sid}")
        return session

    def all(self) -> list[Session]:
        with self._lock:
            return sorted(self._sessions.values(), key=lambda s: s.data["created_at"])


def create_app(session_dir: str) -> FastAPI:
    store = SessionStore(session_dir)
    app = FastAPI(title="steinerpoem composer service")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content={"error": exc.message})

    @app.exception_handler(RequestValidationError)
    async def _request_error(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=422, content={"error": str(exc)})

    @app.post("/sessions")
    def create_session(req: CreateSessionRequest):
        return store.create(req).public()

    @app.get("/sessions")
    def list_sessions():
        return [s.summary() for s in store.all()]

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        return store.get(sid).public()

    @app.put("/sessions/{sid}/lines/{stanza}/{line}")
    def update_line(sid: str, stanza: int, line: int, req: UpdateLineRequest):
        session = store.get(sid)
        text = req.text
        if "\n" in text or "\r" in text:
            raise ApiError(422, "line text must be a single line")
        if text.lstrip().startswith("#!"):
            raise ApiError(422, "line text cannot start with the header marker '#!'")
        with session.lock:
            draft = session.data["draft"]
            if not (1 <= stanza <= len(draft)):
                raise ApiError(
                    422, f"stanza {stanza} out of range 1..{len(draft)}"
                )
            if not (1 <= line <= len(draft[stanza - 1])):
                raise ApiError(
                    422,
                    f"line {line} out of range 1..{len(draft[stanza - 1])} "
                    f"in stanza {stanza}",
                )
            draft[stanza - 1][line - 1] = text
            session.data["revision"] += 1
            session.data["updated_at"] = _now()
            report = validate_poem(session.poem())
            store.persist(session)
            revision = session.data["revision"]
        line_findings = []
        other_findings = []
        for f in report.findings:
            loc = f.location or {}
            if loc.get("stanza") == stanza and loc.get("line") == line:
                line_findings.append(f.to_json())
            else:
                other_findings.append(f.to_json())
        return {
            "revision": revision,
            "verdict": report.verdict,
            "line": {"stanza": stanza, "line": line, "findings": line_findings},
            "poem": {"findings": other_findings},
        }

    @app.post("/sessions/{sid}/validate")
    def validate_session(sid: str):
        session = store.get(sid)
        with session.lock:
            report = validate_poem(session.poem())
            revision = session.data["revision"]
        doc = report.to_json()
        doc["revision"] = revision
        return doc

    @app.get("/sessions/{sid}/export")
    def export_session(sid: str, format: str = "json"):
        session = store.get(sid)
        with session.lock:
            poem_text = session.poem_text()
            report = validate_poem(session.poem())
            decomp = to_decomposition(session.system, session.data["keywords"])
        if format == "poem":
            return PlainTextResponse(poem_text)
        if format in ("dot", "tikz"):
            return PlainTextResponse(export_graph(decomp, format))
        if format == "json":
            graph_doc = json.loads(export_graph(decomp, "json"))
            if session.resolution is not None:
                index = {t: i for i, t in enumerate(session.system.triples)}
                graph_doc["classes"] = [
                    [index[t] for t in cl] for cl in session.resolution.classes
                ]
            return {
                "poem": poem_text,
                "report": report.to_json(),
                "graph": graph_doc,
            }
        raise ApiError(
            422, f"unknown export format {format!r}: expected poem, dot, tikz, or json"
        )

    return app


def run_server(host: str, port: int, session_dir: str) -> None:
    import uvicorn

    uvicorn.run(create_app(session_dir), host=host, port=port)

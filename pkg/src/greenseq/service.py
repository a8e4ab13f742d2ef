"""HTTP session service for the interactive mutation explorer.

Sessions are in-memory and evicted after an idle period; requests to one
session are serialized by a per-session lock while distinct sessions proceed
independently. Every snapshot re-derives the current state by replaying the
history from the framed initial matrix, so a drifted session is a hard error
rather than silently wrong data.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .errors import GreenSeqError, ParseError
from .matrices import ExchangeMatrix, frame, mutate_sequence
from .quiver import decompose
from .search import DEFAULT_SEARCH_DEPTH, GreenState, find_sequence
from .serialize import document_from_obj

DEFAULT_IDLE_TTL = 3600.0
DEFAULT_SEARCH_TIMEOUT = 10.0
DEFAULT_SEARCH_STATE_CAP = 200_000


@dataclass
class _Session:
    id: str
    exchange: ExchangeMatrix
    state: GreenState
    green_so_far: bool = True
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)


class SessionStore:
    def __init__(self, idle_ttl: float = DEFAULT_IDLE_TTL):
        self.idle_ttl = idle_ttl
        self._sessions: dict[str, _Session] = {}
        self._lock = threading.Lock()

    def create(self, exchange: ExchangeMatrix) -> _Session:
        session = _Session(
            id=secrets.token_urlsafe(9),
            exchange=exchange,
            state=GreenState.initial(exchange),
        )
        with self._lock:
            self._evict_idle()
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> _Session:
        with self._lock:
            self._evict_idle()
            session = self._sessions.get(session_id)
            if session is None:
                raise HTTPException(status_code=404, detail=f"unknown session {session_id}")
            session.last_access = time.monotonic()
            return session

    def _evict_idle(self) -> None:
        cutoff = time.monotonic() - self.idle_ttl
        stale = [sid for sid, s in self._sessions.items() if s.last_access < cutoff]
        for sid in stale:
            del self._sessions[sid]


def _snapshot(session: _Session) -> dict:
    state = session.state
    replayed = mutate_sequence(frame(session.exchange), state.history)
    if replayed != state.ext:
        raise HTTPException(status_code=500, detail="session state does not replay; bug")
    greens = sorted(state.greens)
    reds = sorted(state.reds)
    return {
        "id": session.id,
        "n": state.ext.n,
        "b": state.ext.principal.to_lists(),
        "c": state.ext.attached.to_lists(),
        "history": list(state.history),
        "greens": greens,
        "reds": reds,
        "allRed": len(reds) == state.ext.n,
        "isGreenSequenceSoFar": session.green_so_far,
        "symmetrizer": list(state.ext.symmetrizer),
    }


def create_app(
    *,
    static_dir=None,
    idle_ttl: float = DEFAULT_IDLE_TTL,
    search_timeout: float = DEFAULT_SEARCH_TIMEOUT,
    search_state_cap: int = DEFAULT_SEARCH_STATE_CAP,
    default_search_depth: int = DEFAULT_SEARCH_DEPTH,
) -> FastAPI:
    app = FastAPI(title="greenseq explorer")
    store = SessionStore(idle_ttl=idle_ttl)
    app.state.store = store

    @app.exception_handler(GreenSeqError)
    def _domain_error(request, exc: GreenSeqError):
        status = 400 if isinstance(exc, ParseError) else 422
        return JSONResponse(status_code=status, content={"error": str(exc)})

    @app.post("/api/sessions")
    def create_session(body: dict):
        try:
            doc = document_from_obj(body)
            exchange = doc.to_exchange()
        except GreenSeqError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        session = store.create(exchange)
        with session.lock:
            return _snapshot(session)

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return _snapshot(session)

    @app.post("/api/sessions/{session_id}/mutations")
    def apply_mutation(session_id: str, body: dict):
        session = store.get(session_id)
        k = body.get("k")
        if isinstance(k, bool) or not isinstance(k, int):
            raise HTTPException(status_code=422, detail='"k" must be an integer')
        with session.lock:
            n = session.exchange.n
            if not (1 <= k <= n):
                raise HTTPException(status_code=422, detail=f"index {k} out of range 1..{n}")
            if k not in session.state.greens:
                session.green_so_far = False
            session.state = session.state.apply(k)
            return _snapshot(session)

    @app.post("/api/sessions/{session_id}/undo")
    def undo(session_id: str):
        session = store.get(session_id)
        with session.lock:
            history = session.state.history
            if not history:
                raise HTTPException(status_code=409, detail="nothing to undo")
            session.state = _replay(session.exchange, history[:-1])
            session.green_so_far = _green_so_far(session.exchange, history[:-1])
            return _snapshot(session)

    @app.get("/api/sessions/{session_id}/decomposition")
    def get_decomposition(session_id: str):
        session = store.get(session_id)
        with session.lock:
            decomposition = decompose(session.exchange)
            return {
                "blocks": [sorted(block) for block in decomposition.blocks],
                "permutation": list(decomposition.permutation),
            }

    @app.post("/api/sessions/{session_id}/search")
    def run_search(session_id: str, body: dict):
        session = store.get(session_id)
        target = body.get("target", "mgs")
        if target not in ("mgs", "g2r"):
            raise HTTPException(status_code=422, detail='"target" must be "mgs" or "g2r"')
        max_depth = body.get("maxDepth", default_search_depth)
        if isinstance(max_depth, bool) or not isinstance(max_depth, int) or max_depth < 0:
            raise HTTPException(status_code=422, detail='"maxDepth" must be a nonnegative integer')
        with session.lock:
            outcome = find_sequence(
                session.exchange,
                target,
                max_depth,
                max_states=search_state_cap,
                time_budget=search_timeout,
            )
        return {
            "result": "found" if outcome.found else "exhausted",
            "sequence": list(outcome.sequence) if outcome.sequence is not None else None,
            "depth": outcome.depth,
            "statesVisited": outcome.states_visited,
            "elapsed": outcome.elapsed,
            "budgetExceeded": outcome.out_of_budget,
        }

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def _replay(exchange: ExchangeMatrix, history: tuple[int, ...]) -> GreenState:
    state = GreenState.initial(exchange)
    for k in history:
        state = state.apply(k)
    return state


def _green_so_far(exchange: ExchangeMatrix, history: tuple[int, ...]) -> bool:
    state = GreenState.initial(exchange)
    for k in history:
        if k not in state.greens:
            return False
        state = state.apply(k)
    return True

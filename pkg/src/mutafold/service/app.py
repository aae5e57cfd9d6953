"""FastAPI service: interactive mutation sessions plus stateless analysis.

Sessions are in-memory; an optional append-only journal file replays them
across restarts.  Every verdict is a pure function of the current state, so
two sessions reaching the same diagram agree regardless of path.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from pathlib import Path
from typing import Dict, List, Optional

from fastapi import FastAPI, HTTPException

from ..analysis import analyze_diagram, matrix_for
from ..diagram import Diagram, diagram_of
from ..errors import MutafoldError, ParseError, ValidationError
from ..io import parse_input, print_matrix
from ..matrix import ExchangeMatrix, mutate_matrix
from .models import (
    AnalyzeRequest,
    CreateSessionRequest,
    MutateRequest,
    StateResponse,
)


class Session:
    """Seed matrix plus mutation history; replay reproduces the state."""

    def __init__(self, sid: str, seed: ExchangeMatrix):
        self.sid = sid
        self.seed = seed
        self.history: List[int] = []
        self.current = seed
        self.lock = threading.Lock()

    def mutate(self, k: int) -> None:
        self.current = mutate_matrix(self.current, k)
        self.history.append(k)

    def undo(self) -> None:
        if not self.history:
            raise MutafoldError("history is empty")
        k = self.history.pop()
        # mutation is an involution, so undo re-mutates at the same vertex
        self.current = mutate_matrix(self.current, k)


def create_app(journal_path: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="mutafold", version="0.1.0")
    sessions: Dict[str, Session] = {}
    max_nodes = None
    env = os.environ.get("MUTAFOLD_MAX_NODES")
    if env:
        max_nodes = int(env)
    journal = Path(journal_path) if journal_path else None

    def log(event: dict) -> None:
        if journal is None:
            return
        with journal.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(event) + "\n")

    def restore() -> None:
        if journal is None or not journal.exists():
            return
        for line in journal.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            event = json.loads(line)
            if event["op"] == "create":
                seed = parse_input(event["matrix"])
                sessions[event["sid"]] = Session(event["sid"], seed)
            elif event["op"] == "mutate":
                sessions[event["sid"]].mutate(event["vertex"])
            elif event["op"] == "undo":
                sessions[event["sid"]].undo()

    restore()

    diagram_key_cache: Dict[str, str] = {}

    def state_response(sess: Session) -> StateResponse:
        S = diagram_of(sess.current)
        info = analyze_diagram(S, B=sess.current, max_nodes=max_nodes)
        root_key = diagram_key_cache.setdefault(
            sess.sid, analyze_diagram(diagram_of(sess.seed), max_nodes=max_nodes)["canonical_key"]
        )
        return StateResponse(
            session_id=sess.sid,
            history=list(sess.history),
            back_to_start=bool(sess.history) and info["canonical_key"] == root_key,
            **{k: v for k, v in info.items() if k != "size_matrices"},
        )

    def seed_matrix_from_text(text: str) -> ExchangeMatrix:
        value = parse_input(text)
        if isinstance(value, Diagram):
            return matrix_for(value)
        if isinstance(value, ExchangeMatrix):
            return value
        raise ParseError("session input must be a diagram or a matrix")

    @app.post("/session", response_model=StateResponse)
    def create_session(req: CreateSessionRequest):
        try:
            seed = seed_matrix_from_text(req.text)
        except (ParseError, ValidationError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        sid = uuid.uuid4().hex[:12]
        sessions[sid] = Session(sid, seed)
        log({"op": "create", "sid": sid, "matrix": print_matrix(seed)})
        return state_response(sessions[sid])

    @app.get("/session/{sid}", response_model=StateResponse)
    def get_session(sid: str):
        sess = sessions.get(sid)
        if sess is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return state_response(sess)

    @app.post("/session/{sid}/mutate", response_model=StateResponse)
    def mutate(sid: str, req: MutateRequest):
        sess = sessions.get(sid)
        if sess is None:
            raise HTTPException(status_code=404, detail="unknown session")
        with sess.lock:
            if not 1 <= req.vertex <= sess.current.n:
                raise HTTPException(
                    status_code=400,
                    detail=f"vertex {req.vertex} outside 1..{sess.current.n}",
                )
            sess.mutate(req.vertex)
            log({"op": "mutate", "sid": sid, "vertex": req.vertex})
            return state_response(sess)

    @app.post("/session/{sid}/undo", response_model=StateResponse)
    def undo(sid: str):
        sess = sessions.get(sid)
        if sess is None:
            raise HTTPException(status_code=404, detail="unknown session")
        with sess.lock:
            if not sess.history:
                raise HTTPException(status_code=400, detail="history is empty")
            sess.undo()
            log({"op": "undo", "sid": sid})
            return state_response(sess)

    @app.post("/analyze", response_model=StateResponse)
    def analyze(req: AnalyzeRequest):
        try:
            value = parse_input(req.text)
        except (ParseError, ValidationError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        if isinstance(value, ExchangeMatrix):
            S, B = diagram_of(value), value
        elif isinstance(value, Diagram):
            S, B = value, None
        else:
            raise HTTPException(status_code=400, detail="analyze takes a diagram or matrix")
        info = analyze_diagram(S, B=B, max_nodes=max_nodes)
        return StateResponse(
            history=[], **{k: v for k, v in info.items() if k != "size_matrices"}
        )

    return app


app = create_app(os.environ.get("MUTAFOLD_JOURNAL"))

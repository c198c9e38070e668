"""Local HTTP companion service for scripts and the web UI.

Sessions are in-memory; ids are handed out from a counter so that replaying
a recorded request log against a fresh service reproduces identical
responses byte for byte (all randomness comes from client-supplied seeds).
Requests touching one session are serialized by a per-session lock.
"""
from __future__ import annotations

import itertools
import json
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, StreamingResponse
from pydantic import BaseModel

from . import game
from .correspondence import CrossoutTuple, decode, encode
from .errors import ConstraintError, GuardLimitError, ValidationError
from .identities import run_suites


@dataclass
class SessionRecord:
    session_id: str
    state: game.GameState
    seed: int | None
    created: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)


class NewGameBody(BaseModel):
    n: int | None = None
    w: list[int] | None = None
    human_role: str | None = None
    seed: int | None = None


class MoveBody(BaseModel):
    position: int | None = None
    auto: bool = True


def create_app(log_path: str | None = None) -> FastAPI:
    app = FastAPI(title="crossout service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, SessionRecord] = {}
    counter = itertools.count(1)
    log_lock = threading.Lock()

    def log_request(method: str, path: str, body) -> None:
        if log_path is None:
            return
        with log_lock:
            with open(log_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps({"method": method, "path": path, "body": body}) + "\n")

    def get_record(session_id: str) -> SessionRecord:
        record = sessions.get(session_id)
        if record is None:
            raise UnknownSession(session_id)
        return record

    class UnknownSession(Exception):
        def __init__(self, session_id):
            self.session_id = session_id

    @app.exception_handler(UnknownSession)
    async def _unknown_session(request: Request, exc: UnknownSession):
        return JSONResponse({"error": f"unknown session {exc.session_id}"}, status_code=404)

    @app.exception_handler(game.IllegalMoveError)
    async def _illegal_move(request: Request, exc: game.IllegalMoveError):
        return JSONResponse({"error": "not in remaining", "detail": str(exc)}, status_code=409)

    @app.exception_handler(game.GameStateError)
    async def _state_error(request: Request, exc: game.GameStateError):
        return JSONResponse({"error": str(exc)}, status_code=409)

    @app.exception_handler(ValidationError)
    async def _validation(request: Request, exc: ValidationError):
        return JSONResponse({"error": str(exc)}, status_code=422)

    @app.exception_handler(ConstraintError)
    async def _constraint(request: Request, exc: ConstraintError):
        return JSONResponse({"error": str(exc)}, status_code=422)

    @app.exception_handler(GuardLimitError)
    async def _guard(request: Request, exc: GuardLimitError):
        return JSONResponse({"error": str(exc)}, status_code=422)

    @app.post("/games")
    def create_game(body: NewGameBody):
        log_request("POST", "/games", body.model_dump())
        if (body.n is None) == (body.w is None):
            raise ValidationError("provide exactly one of 'n' or 'w'")
        start = body.w if body.w is not None else body.n
        state = game.new_game(start, human_role=body.human_role, seed=body.seed)
        session_id = f"g{next(counter)}"
        sessions[session_id] = SessionRecord(session_id, state, body.seed)
        return {"session": session_id, "state": state.to_json()}

    @app.get("/games/{session_id}")
    def get_game(session_id: str):
        return get_record(session_id).state.to_json()

    @app.post("/games/{session_id}/moves")
    def post_move(session_id: str, body: MoveBody):
        log_request("POST", f"/games/{session_id}/moves", body.model_dump())
        record = get_record(session_id)
        with record.lock:
            state = record.state
            if body.position is not None:
                if state.game_over:
                    raise game.GameStateError("the game is over")
                if state.human_role is not None and state.turn != state.human_role:
                    raise game.GameStateError("it is the engine's turn")
                state = game.apply_move(state, body.position)
            else:
                state = game.apply_move(state, game.engine_move(state))
            if body.auto and state.human_role is not None:
                while not state.game_over and state.turn != state.human_role:
                    state = game.apply_move(state, game.engine_move(state))
            record.state = state
            return state.to_json()

    @app.get("/games/{session_id}/analysis")
    def get_analysis(session_id: str):
        record = get_record(session_id)
        allocation = game.analysis(record.state)
        return {
            "analysis": [
                {"position": p, "eater": allocation[p]} for p in sorted(allocation)
            ]
        }

    @app.post("/encode")
    def encode_endpoint(body: dict):
        log_request("POST", "/encode", body)
        if "w" not in body:
            raise ValidationError("body must contain 'w'")
        return encode(tuple(body["w"])).to_json()

    @app.post("/decode")
    def decode_endpoint(body: dict):
        log_request("POST", "/decode", body)
        if "tuple" not in body:
            raise ValidationError("body must contain 'tuple'")
        return {"w": list(decode(CrossoutTuple.from_json(body["tuple"])))}

    @app.get("/identities")
    def identities_endpoint(suite: str = "all", n: int = 2):
        names = [s for s in suite.split(",") if s.strip()]
        # materialized up front so errors surface before the stream starts
        reports = list(run_suites(names, n))
        lines = "".join(
            json.dumps(r.to_json(include_elapsed=False)) + "\n" for r in reports
        )
        return StreamingResponse(iter([lines]), media_type="application/x-ndjson")

    return app


def replay_log(client, log_path: str) -> list:
    """Re-issue every recorded mutating request against a client; returns
    the responses in order."""
    responses = []
    with open(log_path, encoding="utf-8") as fh:
        for line in fh:
            entry = json.loads(line)
            responses.append(client.post(entry["path"], json=entry["body"]))
    return responses

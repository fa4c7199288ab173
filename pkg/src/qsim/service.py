"""HTTP/JSON session service for remote circuit stepping.

Endpoints:
    POST   /sessions               create from a program or a Grover spec
    POST   /sessions/{id}/step     {"direction": "forward" | "backward"}
    GET    /sessions/{id}/state    cursor, state, probabilities
    POST   /sessions/{id}/restart  optionally retargets a Grover session
    DELETE /sessions/{id}

Sessions live in memory with idle-TTL eviction. Mutations on a single
session are serialized by a per-session lock; different sessions are
independent. The state payload uses the same JSON schema as the CLI:
`{"qubits": n, "amplitudes": [[re, im], ...]}`.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from . import dsl
from .circuit import ExecSession
from .diagram import amplitudes_to_json
from .errors import CapacityError, NavigationError, ParseError, QsimError, RangeError
from .grover import GroverSpec, grover_circuit, optimal_iterations
from .measure import marginal_probabilities, probabilities


@dataclass
class SessionRecord:
    session: ExecSession
    grover: GroverSpec | None
    created_at: float
    last_access: float
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """Thread-safe id -> session map with idle-TTL eviction."""

    def __init__(self, ttl: float):
        self.ttl = ttl
        self._records: dict[str, SessionRecord] = {}
        self._guard = threading.Lock()

    def _evict(self, now: float):
        dead = [sid for sid, rec in self._records.items() if now - rec.last_access > self.ttl]
        for sid in dead:
            del self._records[sid]

    def create(self, session: ExecSession, grover: GroverSpec | None) -> str:
        now = time.monotonic()
        with self._guard:
            self._evict(now)
            sid = secrets.token_urlsafe(16)
            while sid in self._records:
                sid = secrets.token_urlsafe(16)
            self._records[sid] = SessionRecord(session, grover, now, now)
            return sid

    def get(self, sid: str) -> SessionRecord | None:
        now = time.monotonic()
        with self._guard:
            self._evict(now)
            rec = self._records.get(sid)
            if rec is not None:
                rec.last_access = now
            return rec

    def delete(self, sid: str) -> bool:
        with self._guard:
            return self._records.pop(sid, None) is not None


def _error(status: int, message: str, **extra) -> JSONResponse:
    return JSONResponse({"error": message, **extra}, status_code=status)


def _state_payload(session: ExecSession) -> dict:
    return {
        "qubits": session.circuit.qubit_count,
        "amplitudes": amplitudes_to_json(session.state.data),
    }


def _grover_spec_from(body: dict) -> GroverSpec:
    k = body.get("k")
    target = body.get("target")
    if not isinstance(k, int) or not isinstance(target, int):
        raise RangeError("grover spec needs integer 'k' and 'target'")
    iterations = body.get("iterations", 2 if k == 2 else None)
    if iterations is None:
        iterations = optimal_iterations(2**k)
    if not isinstance(iterations, int):
        raise RangeError("grover 'iterations' must be an integer")
    return GroverSpec(k, target, iterations)


def create_app(session_ttl: float = 3600.0, cors_origin: str | None = None) -> FastAPI:
    app = FastAPI(title="qsim stepping service")
    store = SessionStore(session_ttl)
    app.state.store = store

    if cors_origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    async def _json_body(request: Request) -> dict | None:
        raw = await request.body()
        if not raw:
            return {}
        import json

        try:
            body = json.loads(raw)
        except json.JSONDecodeError:
            return None
        return body if isinstance(body, dict) else None

    @app.post("/sessions")
    async def create_session(request: Request):
        body = await _json_body(request)
        if body is None or ("program" in body) == ("grover" in body):
            return _error(400, "body must contain exactly one of 'program' or 'grover'")
        try:
            if "program" in body:
                if not isinstance(body["program"], str):
                    return _error(400, "'program' must be a string")
                circuit = dsl.parse(body["program"])
                grover = None
            else:
                if not isinstance(body["grover"], dict):
                    return _error(400, "'grover' must be an object")
                grover = _grover_spec_from(body["grover"])
                circuit = grover_circuit(grover)
            session = ExecSession(circuit)
        except ParseError as exc:
            detail = exc.to_dict()
            return _error(400, str(exc), span=detail["span"], expected=detail["expected"])
        except (CapacityError, QsimError) as exc:
            return _error(400, str(exc))
        sid = store.create(session, grover)
        return JSONResponse(
            {
                "id": sid,
                "qubits": circuit.qubit_count,
                "stage_count": circuit.stage_count,
                "stage_labels": circuit.stage_labels,
                "state": _state_payload(session),
            },
            status_code=201,
        )

    @app.post("/sessions/{sid}/step")
    async def step(sid: str, request: Request):
        rec = store.get(sid)
        if rec is None:
            return _error(404, "unknown session")
        body = await _json_body(request)
        direction = (body or {}).get("direction")
        if direction not in ("forward", "backward"):
            return _error(400, "body must set 'direction' to 'forward' or 'backward'")
        with rec.lock:
            try:
                if direction == "forward":
                    rec.session.step_forward()
                else:
                    rec.session.step_backward()
            except NavigationError as exc:
                return _error(409, str(exc))
            return JSONResponse({"cursor": rec.session.cursor, "state": _state_payload(rec.session)})

    @app.get("/sessions/{sid}/state")
    async def get_state(sid: str):
        rec = store.get(sid)
        if rec is None:
            return _error(404, "unknown session")
        with rec.lock:
            session = rec.session
            payload = {
                "cursor": session.cursor,
                "stage_count": session.stage_count,
                "state": _state_payload(session),
                "probabilities": [float(p) for p in probabilities(session.state)],
            }
            if rec.grover is not None:
                data_wires = tuple(range(rec.grover.data_qubits))
                payload["data_probabilities"] = [
                    float(p) for p in marginal_probabilities(session.state, data_wires)
                ]
            return JSONResponse(payload)

    @app.post("/sessions/{sid}/restart")
    async def restart(sid: str, request: Request):
        rec = store.get(sid)
        if rec is None:
            return _error(404, "unknown session")
        body = await _json_body(request)
        if body is None:
            return _error(400, "body must be a JSON object")
        with rec.lock:
            grover_body = body.get("grover")
            if grover_body is not None:
                if rec.grover is None:
                    return _error(400, "session was not created from a grover spec")
                if not isinstance(grover_body, dict):
                    return _error(400, "'grover' must be an object")
                try:
                    spec = GroverSpec(
                        rec.grover.data_qubits,
                        grover_body.get("target", rec.grover.target),
                        grover_body.get("iterations", rec.grover.iterations),
                    )
                    rec.session = ExecSession(grover_circuit(spec))
                    rec.grover = spec
                except (QsimError, TypeError) as exc:
                    return _error(400, str(exc))
            else:
                rec.session.restart()
            return JSONResponse({"cursor": rec.session.cursor, "state": _state_payload(rec.session)})

    @app.delete("/sessions/{sid}")
    async def delete_session(sid: str):
        if not store.delete(sid):
            return _error(404, "unknown session")
        return Response(status_code=204)

    return app

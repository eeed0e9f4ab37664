"""HTTP API over the ideation engine.

Every endpoint delegates to one engine operation; mutations serialize
through the engine's per-session locks. Errors map onto ApiError bodies
with a closed code set (400 validation, 404 unknown ids, 409 precondition
conflicts, 502 provider failures).
"""

from __future__ import annotations

import threading
import uuid

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..blend import BlendPair, BlendPlan
from ..config import Config
from ..engine import Engine
from ..errors import BlendError, ValidationError
from . import schemas

API_VERSION = "1"


def _pair(p: schemas.PairIn) -> BlendPair:
    return BlendPair(
        object_a=p.object_a,
        attribute_a=p.attribute_a,
        object_b=p.object_b,
        attribute_b=p.attribute_b,
    )


def create_app(config: Config | None = None, engine: Engine | None = None) -> FastAPI:
    engine = engine or Engine(config or Config())
    app = FastAPI(title="blendstudio", version=API_VERSION)
    app.state.engine = engine
    app.state.jobs = {}
    app.state.jobs_lock = threading.Lock()

    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(BlendError)
    async def blend_error_handler(_: Request, exc: BlendError):
        payload = schemas.ApiError(
            code=exc.code, message=str(exc), provider_detail=exc.detail
        )
        return JSONResponse(status_code=exc.http_status, content=payload.model_dump())

    @app.exception_handler(RequestValidationError)
    async def validation_handler(_: Request, exc: RequestValidationError):
        payload = schemas.ApiError(code="validation", message=str(exc.errors()[:3]))
        return JSONResponse(status_code=400, content=payload.model_dump())

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "offline": engine.config.offline}

    # -- sessions -------------------------------------------------------------

    @app.post("/sessions", response_model=schemas.SessionCreated)
    def create_session(body: schemas.CreateSessionRequest):
        session = engine.create_session(body.expression, session_id=body.session_id)
        return {
            "id": session.id,
            "tokens": [t.to_dict() for t in session.expression.tokens],
        }

    @app.get("/sessions/{sid}")
    def session_document(sid: str):
        return engine.session_document(sid)

    @app.get("/sessions/{sid}/history")
    def session_history(sid: str):
        return {"events": engine.list_history(sid)}

    @app.post("/sessions/{sid}/concepts", response_model=schemas.SelectedConceptsOut)
    def select_concepts(sid: str, body: schemas.SelectConceptsRequest):
        session = engine.select_concepts(sid, body.indices)
        return {"id": session.id, "selected": session.expression.selected_concepts}

    @app.post("/sessions/{sid}/theme", response_model=schemas.ThemeOut)
    def infer_theme(sid: str):
        session = engine.infer_theme(sid)
        return {"sentence": session.theme.sentence}

    # -- candidates ------------------------------------------------------------

    @app.post("/sessions/{sid}/concepts/{concept}/objects")
    def suggest_objects(sid: str, concept: str, body: schemas.ObjectsRequest):
        batch = engine.suggest_objects(sid, concept, iteration=body.iteration)
        return {"candidates": [c.to_dict() for c in batch]}

    @app.post("/sessions/{sid}/objects/attributes")
    def suggest_attributes(sid: str, body: schemas.AttributesRequest):
        filled = engine.suggest_attributes(sid, body.names)
        return {"candidates": [c.to_dict() for c in filled]}

    @app.post("/sessions/{sid}/objects/preview", response_model=schemas.PreviewOut)
    def preview_object(sid: str, body: schemas.PreviewRequest):
        artifact = engine.preview_object(sid, body.name)
        return {
            "object": body.name,
            "artifact_id": artifact.id,
            "url": f"/images/{artifact.id}",
        }

    @app.post("/sessions/{sid}/objects/replace", response_model=schemas.ReplaceOut)
    def replace_object(sid: str, body: schemas.ReplaceRequest):
        session = engine.replace_object(sid, body.concept, body.old, body.new)
        removed = 0
        for event in reversed(session.event_log):
            if event["type"] == "object_replaced" and event["data"].get("new") == body.new:
                removed = event["data"].get("removed_items", 0)
                break
        return {
            "id": session.id,
            "concept": body.concept,
            "old": body.old,
            "new": body.new,
            "removed_items": removed,
            "candidates": [c.to_dict() for c in session.candidates_for(body.concept)],
        }

    # -- analysis ---------------------------------------------------------------

    @app.get("/sessions/{sid}/analysis/objects")
    def analysis_objects(sid: str):
        return engine.analysis_objects(sid).to_dict()

    @app.get("/sessions/{sid}/analysis/attributes")
    def analysis_attributes(sid: str, pair: str):
        parts = [p.strip() for p in pair.split(",")]
        if len(parts) != 2 or not all(parts):
            raise ValidationError("pair must be 'objectA,objectB'")
        return engine.analysis_attributes(sid, parts[0], parts[1]).to_dict()

    # -- blending ----------------------------------------------------------------

    @app.post("/sessions/{sid}/schemes")
    def generate_schemes(sid: str, body: schemas.SchemesRequest):
        schemes = engine.generate_schemes(sid, _pair(body.pair), body.n)
        return {"schemes": [s.to_dict() for s in schemes]}

    @app.post("/sessions/{sid}/prompts")
    def compose_prompt(sid: str, body: schemas.PromptRequest):
        plan = None
        if body.plan is not None:
            plan = BlendPlan(
                primary=_pair(body.plan.primary),
                secondary=[tuple(s) for s in body.plan.secondary],
            )
        prompt = engine.compose_prompt(sid, _pair(body.pair), body.scheme_index, plan=plan)
        return prompt.to_dict()

    @app.post("/sessions/{sid}/plan-multi", response_model=schemas.PlanMultiOut)
    def plan_multi(sid: str, body: schemas.PlanMultiRequest):
        plan, _ = engine.plan_multi(sid, {c: tuple(v) for c, v in body.choices.items()})
        return plan.to_dict()

    # -- images ---------------------------------------------------------------------

    def _run_image_job(sid: str, prompt_id: str, job_id: str) -> None:
        try:
            item = engine.generate_image(sid, prompt_id)
            status = {"job_id": job_id, "status": "done", "item": item.to_dict(), "error": None}
        except BlendError as exc:
            status = {
                "job_id": job_id,
                "status": "failed",
                "item": None,
                "error": {"code": exc.code, "message": str(exc), "provider_detail": exc.detail},
            }
        with app.state.jobs_lock:
            app.state.jobs[job_id] = status

    @app.post("/sessions/{sid}/images")
    def generate_image(sid: str, body: schemas.ImagesRequest, response: Response):
        engine.session(sid)  # 404 before accepting a job
        if body.mode == "async":
            job_id = uuid.uuid4().hex[:12]
            with app.state.jobs_lock:
                app.state.jobs[job_id] = {
                    "job_id": job_id,
                    "status": "pending",
                    "item": None,
                    "error": None,
                }
            worker = threading.Thread(
                target=_run_image_job, args=(sid, body.prompt_id, job_id), daemon=True
            )
            worker.start()
            response.status_code = 202
            return {
                "job_id": job_id,
                "poll_url": f"/sessions/{sid}/images/jobs/{job_id}",
                "status": "pending",
            }
        item = engine.generate_image(sid, body.prompt_id)
        return item.to_dict()

    @app.get("/sessions/{sid}/images/jobs/{job_id}", response_model=schemas.JobStatus)
    def image_job(sid: str, job_id: str):
        engine.session(sid)
        with app.state.jobs_lock:
            status = app.state.jobs.get(job_id)
        if status is None:
            return JSONResponse(
                status_code=404,
                content=schemas.ApiError(code="unknown_job", message=f"no job {job_id}").model_dump(),
            )
        return status

    @app.get("/sessions/{sid}/canvas")
    def canvas(sid: str):
        session = engine.session(sid)
        return {"items": [i.to_dict() for i in session.canvas]}

    @app.get("/images/{artifact_id}")
    def image_bytes(artifact_id: str):
        data = engine.artifact_bytes(artifact_id)
        return Response(content=data, media_type="image/png")

    return app

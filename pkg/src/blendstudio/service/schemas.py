"""Pydantic request/response models for the HTTP API.

The JSON document shapes (session, diagram) are described in
docs/schemas; free-form payloads produced by the core (diagrams, session
documents, events) pass through as dicts.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class ApiError(BaseModel):
    code: str
    message: str
    provider_detail: str | None = None


class CreateSessionRequest(BaseModel):
    expression: str
    session_id: str | None = None


class TokenOut(BaseModel):
    surface: str
    pos: str
    span: tuple[int, int]
    selected: bool


class SessionCreated(BaseModel):
    id: str
    tokens: list[TokenOut]


class SelectConceptsRequest(BaseModel):
    indices: list[int]


class SelectedConceptsOut(BaseModel):
    id: str
    selected: list[str]


class ThemeOut(BaseModel):
    sentence: str


class ObjectsRequest(BaseModel):
    iteration: int | None = Field(default=None, ge=1)


class CandidateOut(BaseModel):
    name: str
    concept: str
    rationale: str
    attributes: list[str]
    iteration: int
    preview_id: str | None = None


class AttributesRequest(BaseModel):
    names: list[str]


class PairIn(BaseModel):
    object_a: str
    attribute_a: str
    object_b: str
    attribute_b: str


class SchemesRequest(BaseModel):
    pair: PairIn
    n: int | None = Field(default=None, ge=1, le=5)


class SchemeOut(BaseModel):
    scheme: str
    reason: str


class PlanIn(BaseModel):
    primary: PairIn
    secondary: list[tuple[str, str, str]] = Field(default_factory=list)


class PromptRequest(BaseModel):
    pair: PairIn
    scheme_index: int = Field(ge=0)
    plan: PlanIn | None = None


class PromptOut(BaseModel):
    id: str
    text: str
    pair: PairIn
    scheme: SchemeOut
    theme: str
    secondary: list[tuple[str, str, str]] = Field(default_factory=list)
    retired: bool = False


class ImagesRequest(BaseModel):
    prompt_id: str
    mode: str = Field(default="sync", pattern="^(sync|async)$")


class CanvasItemOut(BaseModel):
    prompt_id: str
    coords: tuple[float, float]
    image_refs: list[str]
    count: int


class JobAccepted(BaseModel):
    job_id: str
    poll_url: str
    status: str = "pending"


class JobStatus(BaseModel):
    job_id: str
    status: str  # pending | done | failed
    item: CanvasItemOut | None = None
    error: ApiError | None = None


class ReplaceRequest(BaseModel):
    concept: str
    old: str
    new: str


class ReplaceOut(BaseModel):
    id: str
    concept: str
    old: str
    new: str
    removed_items: int
    candidates: list[CandidateOut]


class PreviewRequest(BaseModel):
    name: str


class PreviewOut(BaseModel):
    object: str
    artifact_id: str
    url: str


class PlanMultiRequest(BaseModel):
    # concept -> [object, attribute]
    choices: dict[str, tuple[str, str]]


class PlanMultiOut(BaseModel):
    primary: PairIn
    secondary: list[tuple[str, str, str]]

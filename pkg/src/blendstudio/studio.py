"""Durable session state and the exploration canvas.

A session accumulates the parsed expression, theme, per-concept candidate
lists, the latest analysis diagrams, composed prompts, canvas items and an
append-only event log. Canvas coordinates are frozen at placement time so
later re-normalization never moves existing items. "Discarding prior
visual information" on object replacement removes canvas items and writes
tombstone events; image files stay on disk for auditability.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .artifacts import ImageArtifact
from .blend import ImagePrompt
from .clock import Clock, SystemClock
from .errors import (
    CorruptSessionFile,
    PreconditionConflict,
    UnknownPrompt,
    UnsupportedSchemaVersion,
)
from .expression import Expression, normalize
from .mapping import ObjectCandidate, Theme
from .scoring import AnalysisDiagram

SESSION_SCHEMA_VERSION = 1


@dataclass
class CanvasItem:
    prompt_id: str
    coords: tuple[float, float]
    image_refs: list[str] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.image_refs)

    def to_dict(self) -> dict:
        return {
            "prompt_id": self.prompt_id,
            "coords": list(self.coords),
            "image_refs": list(self.image_refs),
            "count": self.count,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CanvasItem":
        return cls(
            prompt_id=d["prompt_id"],
            coords=tuple(d["coords"]),
            image_refs=list(d["image_refs"]),
        )


@dataclass
class Session:
    id: str
    expression: Expression
    theme: Theme | None = None
    candidates: dict[str, list[ObjectCandidate]] = field(default_factory=dict)
    diagrams: dict[str, AnalysisDiagram | None] = field(
        default_factory=lambda: {"objects": None, "attributes": None}
    )
    schemes: list = field(default_factory=list)  # last generated BlendScheme list
    schemes_pair: dict | None = None  # pair the schemes were generated for
    prompts: list[ImagePrompt] = field(default_factory=list)
    canvas: list[CanvasItem] = field(default_factory=list)
    event_log: list[dict] = field(default_factory=list)
    schema_version: int = SESSION_SCHEMA_VERSION

    # -- events ---------------------------------------------------------------

    def add_event(self, kind: str, data: dict, clock: Clock | None = None) -> dict:
        event = {
            "seq": len(self.event_log) + 1,
            "ts": (clock or SystemClock()).now_iso(),
            "type": kind,
            "data": data,
        }
        self.event_log.append(event)
        return event

    def list_history(self) -> list[dict]:
        """Chronological event summaries, tombstones included."""
        return list(self.event_log)

    # -- prompts & canvas -------------------------------------------------------

    def store_prompt(self, prompt: ImagePrompt) -> ImagePrompt:
        prompt.id = f"p{len(self.prompts) + 1}"
        self.prompts.append(prompt)
        return prompt

    def find_prompt(self, prompt_id: str) -> ImagePrompt:
        for p in self.prompts:
            if p.id == prompt_id:
                return p
        raise UnknownPrompt(f"no prompt {prompt_id!r} in session {self.id}")

    def find_canvas_item(self, prompt_id: str) -> CanvasItem | None:
        for item in self.canvas:
            if item.prompt_id == prompt_id:
                return item
        return None

    def place_result(
        self, prompt: ImagePrompt, artifact: ImageArtifact, clock: Clock | None = None
    ) -> CanvasItem:
        """Append to the prompt's image group, or open a new one at the
        similarity coordinates the current diagrams report for its pair."""
        stored = self.find_prompt(prompt.id) if prompt.id else None
        if stored is None:
            raise UnknownPrompt("prompt was never stored in this session")
        item = self.find_canvas_item(prompt.id)
        if item is None:
            coords = self._pair_coords(stored)
            item = CanvasItem(prompt_id=prompt.id, coords=coords)
            self.canvas.append(item)
        item.image_refs.append(artifact.id)
        self.add_event(
            "image_generated",
            {"prompt_id": prompt.id, "artifact_id": artifact.id, "count": item.count},
            clock,
        )
        return item

    def _pair_coords(self, prompt: ImagePrompt) -> tuple[float, float]:
        objects = self.diagrams.get("objects")
        attributes = self.diagrams.get("attributes")
        if objects is None or attributes is None:
            raise PreconditionConflict("analysis diagrams must be built before placing images")
        obj_link = objects.link(prompt.pair.object_a, prompt.pair.object_b)
        attr_link = attributes.link(prompt.pair.attribute_a, prompt.pair.attribute_b)
        if obj_link is None or obj_link.norm_sim is None:
            raise PreconditionConflict("objects diagram does not cover the prompt's pair")
        if attr_link is None or attr_link.norm_sim is None:
            raise PreconditionConflict("attributes diagram does not cover the prompt's attributes")
        return (obj_link.norm_sim, attr_link.norm_sim)

    # -- candidates ----------------------------------------------------------------

    def candidates_for(self, concept: str) -> list[ObjectCandidate]:
        key = self._concept_key(concept)
        return self.candidates.get(key, [])

    def _concept_key(self, concept: str) -> str:
        for key in self.candidates:
            if normalize(key) == normalize(concept):
                return key
        return concept

    def find_candidate(self, object_name: str) -> tuple[str, ObjectCandidate] | None:
        wanted = normalize(object_name)
        for concept, cands in self.candidates.items():
            for c in cands:
                if normalize(c.name) == wanted:
                    return concept, c
        return None

    def remove_canvas_items_mentioning(self, object_name: str, clock: Clock | None = None) -> int:
        """Tombstone every canvas item whose prompt references the object."""
        removed = 0
        keep: list[CanvasItem] = []
        for item in self.canvas:
            prompt = self.find_prompt(item.prompt_id)
            if prompt.mentions(object_name):
                self.add_event(
                    "canvas_item_removed",
                    {
                        "prompt_id": item.prompt_id,
                        "object": object_name,
                        "tombstoned_refs": list(item.image_refs),
                        "coords": list(item.coords),
                    },
                    clock,
                )
                removed += 1
            else:
                keep.append(item)
        self.canvas = keep
        return removed

    # -- serialization -----------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "id": self.id,
            "expression": self.expression.to_dict(),
            "theme": self.theme.to_dict() if self.theme else None,
            "candidates": {
                concept: [c.to_dict() for c in cands]
                for concept, cands in self.candidates.items()
            },
            "diagrams": {
                kind: (diagram.to_dict() if diagram else None)
                for kind, diagram in self.diagrams.items()
            },
            "schemes": [s.to_dict() for s in self.schemes],
            "schemes_pair": self.schemes_pair,
            "prompts": [p.to_dict() for p in self.prompts],
            "canvas": [i.to_dict() for i in self.canvas],
            "event_log": self.event_log,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Session":
        from .blend import BlendScheme

        version = d.get("schema_version")
        if version != SESSION_SCHEMA_VERSION:
            # no older on-disk versions exist yet; anything else is foreign
            raise UnsupportedSchemaVersion(
                f"session schema {version!r} not supported (current {SESSION_SCHEMA_VERSION})"
            )
        try:
            session = cls(
                id=d["id"],
                expression=Expression.from_dict(d["expression"]),
                theme=Theme.from_dict(d["theme"]) if d.get("theme") else None,
                candidates={
                    concept: [ObjectCandidate.from_dict(c) for c in cands]
                    for concept, cands in d.get("candidates", {}).items()
                },
                diagrams={
                    kind: (AnalysisDiagram.from_dict(diag) if diag else None)
                    for kind, diag in d.get("diagrams", {}).items()
                },
                schemes=[BlendScheme.from_dict(s) for s in d.get("schemes", [])],
                schemes_pair=d.get("schemes_pair"),
                prompts=[ImagePrompt.from_dict(p) for p in d.get("prompts", [])],
                canvas=[CanvasItem.from_dict(i) for i in d.get("canvas", [])],
                event_log=list(d.get("event_log", [])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CorruptSessionFile(f"session document is malformed: {exc}") from exc
        return session

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2) + "\n"


def save_session(session: Session, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(session.to_json(), encoding="utf-8")
    tmp.replace(path)
    return path


def load_session(path: str | Path) -> Session:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CorruptSessionFile(f"cannot read session file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise CorruptSessionFile(f"session file {path} is not an object")
    return Session.from_dict(data)

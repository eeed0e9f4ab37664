"""Pipeline orchestration over per-session state.

One Engine owns the provider stack (oracle, knowledge, scoring, artifacts)
plus an in-memory session registry with per-session write locks; every
mutation is serialized per session and persisted to the data directory.
Offline mode swaps in fixture playback, deterministic embeddings, the
placeholder image provider, a counter clock and hash-derived session ids,
which is what makes offline runs byte-stable.
"""

from __future__ import annotations

import hashlib
import json
import logging
import threading
import uuid
from pathlib import Path

from . import blend
from .artifacts import ArtifactStore, ImageArtifact
from .clock import Clock, CounterClock, SystemClock
from .config import Config
from .errors import (
    PreconditionConflict,
    UnknownObject,
    UnknownSession,
    ValidationError,
)
from .expression import Expression, normalize, parse_expression, select_concepts
from .knowledge import KnowledgeClient
from .mapping import Mapper, ObjectCandidate
from .oracle import (
    FixtureChatProvider,
    HttpChatProvider,
    HttpImageProvider,
    Oracle,
    PlaceholderImageProvider,
    RecordingChatProvider,
)
from .scoring import (
    AnalysisDiagram,
    HashEmbeddingProvider,
    HttpEmbeddingProvider,
    LexiconSentimentProvider,
    Scorer,
)
from .studio import CanvasItem, Session, load_session, save_session

log = logging.getLogger(__name__)


def _build_embedder(config: Config):
    if config.offline or config.embedding_provider == "fixture":
        entries_file = Path(config.fixtures_dir or ".") / "embeddings.json"
        if config.fixtures_dir and entries_file.exists():
            return HashEmbeddingProvider.from_file(entries_file)
        return HashEmbeddingProvider()
    return HttpEmbeddingProvider(config.embedding_base_url, dim=16)


class Engine:
    def __init__(self, config: Config | None = None) -> None:
        self.config = config or Config()
        cfg = self.config
        self.clock: Clock = CounterClock() if cfg.offline else SystemClock()
        self.artifacts = ArtifactStore(Path(cfg.data_dir) / "artifacts", clock=self.clock)

        if cfg.offline:
            if not cfg.fixtures_dir:
                raise ValidationError("offline mode needs a fixtures directory")
            chat = FixtureChatProvider(cfg.fixtures_dir)
            images = PlaceholderImageProvider()
        else:
            chat = HttpChatProvider(
                cfg.oracle_base_url,
                cfg.oracle_model,
                api_key=cfg.oracle_api_key,
                timeout=cfg.http_timeout,
                retries=cfg.http_retries,
            )
            if cfg.record and cfg.fixtures_dir:
                chat = RecordingChatProvider(chat, cfg.fixtures_dir)
            images = HttpImageProvider(
                cfg.image_base_url,
                cfg.image_model,
                api_key=cfg.image_api_key,
                timeout=max(cfg.http_timeout, 120.0),
                retries=cfg.http_retries,
            )

        self.oracle = Oracle(
            chat,
            images,
            self.artifacts,
            temperature=cfg.temperature,
            max_attempts=cfg.max_attempts,
            in_flight_limit=cfg.in_flight_limit,
        )
        self.knowledge = KnowledgeClient(
            cfg.knowledge_base_url,
            cfg.cache_dir,
            offline=cfg.offline,
            fixtures_dir=cfg.fixtures_dir or None,
            record=cfg.record,
            timeout=cfg.http_timeout,
            retries=cfg.http_retries,
            clock=self.clock,
        )
        self.mapper = Mapper(self.oracle, self.knowledge, related_limit=cfg.related_limit)
        self.scorer = Scorer(embedder=_build_embedder(cfg), sentiments=LexiconSentimentProvider())

        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    # -- registry -----------------------------------------------------------

    def _lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def session(self, session_id: str) -> Session:
        with self._registry_lock:
            found = self._sessions.get(session_id)
        if found is None:
            path = self._session_path(session_id)
            if path.exists():
                found = load_session(path)
                with self._registry_lock:
                    self._sessions[session_id] = found
            else:
                raise UnknownSession(f"no session {session_id!r}")
        return found

    def _session_path(self, session_id: str) -> Path:
        return Path(self.config.data_dir) / "sessions" / f"{session_id}.json"

    def _persist(self, session: Session) -> None:
        save_session(session, self._session_path(session.id))

    # -- pipeline operations ---------------------------------------------------

    def create_session(self, expression_text: str, session_id: str | None = None) -> Session:
        expr = parse_expression(expression_text)
        if session_id is None:
            if self.config.offline:
                digest = hashlib.sha256(f"session:{normalize(expression_text)}".encode())
                session_id = digest.hexdigest()[:12]
            else:
                session_id = uuid.uuid4().hex[:12]
        session = Session(id=session_id, expression=expr)
        session.add_event("session_created", {"expression": expression_text}, self.clock)
        with self._registry_lock:
            self._sessions[session_id] = session
        self._persist(session)
        return session

    def select_concepts(self, session_id: str, picks: list[int]) -> Session:
        session = self.session(session_id)
        with self._lock_for(session_id):
            session.expression = select_concepts(session.expression, picks)
            session.add_event(
                "concepts_selected",
                {"indices": picks, "concepts": session.expression.selected_concepts},
                self.clock,
            )
            self._persist(session)
        return session

    def infer_theme(self, session_id: str) -> Session:
        session = self.session(session_id)
        with self._lock_for(session_id):
            theme = self.mapper.infer_theme(session.expression)
            session.theme = theme
            session.expression.theme = theme.sentence
            session.add_event("theme_inferred", {"sentence": theme.sentence}, self.clock)
            self._persist(session)
        return session

    def suggest_objects(
        self, session_id: str, concept: str, iteration: int | None = None
    ) -> list[ObjectCandidate]:
        session = self.session(session_id)
        with self._lock_for(session_id):
            key = session._concept_key(concept)
            prior = session.candidates.get(key, [])
            if iteration is None:
                iteration = len(prior) // 5 + 1
            exclusions = [c.name for c in prior]
            batch = self.mapper.suggest_objects(
                concept, session.expression, iteration=iteration, exclusions=exclusions
            )
            session.candidates.setdefault(key, []).extend(batch)
            session.add_event(
                "objects_suggested",
                {"concept": concept, "iteration": iteration, "names": [c.name for c in batch]},
                self.clock,
            )
            self._persist(session)
        return batch

    def suggest_attributes(self, session_id: str, names: list[str]) -> list[ObjectCandidate]:
        session = self.session(session_id)
        with self._lock_for(session_id):
            targets: list[ObjectCandidate] = []
            for name in names:
                hit = session.find_candidate(name)
                if hit is None:
                    raise UnknownObject(f"object {name!r} is not a stored candidate")
                targets.append(hit[1])
            filled = self.mapper.suggest_attributes(targets)
            by_name = {normalize(c.name): c for c in filled}
            for concept, cands in session.candidates.items():
                session.candidates[concept] = [
                    by_name.get(normalize(c.name), c) for c in cands
                ]
            session.add_event(
                "attributes_filled", {"names": [c.name for c in filled]}, self.clock
            )
            self._persist(session)
        return filled

    # -- analysis ----------------------------------------------------------------

    def analysis_objects(self, session_id: str) -> AnalysisDiagram:
        """Objects diagram across the first two selected concepts."""
        session = self.session(session_id)
        with self._lock_for(session_id):
            concepts = session.expression.selected_concepts
            if len(concepts) < 2:
                raise PreconditionConflict("need two selected concepts for object analysis")
            left = [c.name for c in session.candidates_for(concepts[0])]
            right = [c.name for c in session.candidates_for(concepts[1])]
            if not left or not right:
                raise PreconditionConflict("suggest objects for both concepts first")
            diagram = self.scorer.build_diagram("objects", left, right)
            session.diagrams["objects"] = diagram
            session.add_event(
                "diagram_built", {"kind": "objects", "links": len(diagram.links)}, self.clock
            )
            self._persist(session)
        return diagram

    def analysis_attributes(self, session_id: str, object_a: str, object_b: str) -> AnalysisDiagram:
        session = self.session(session_id)
        with self._lock_for(session_id):
            diagram = self._build_attribute_diagram(session, object_a, object_b)
            session.diagrams["attributes"] = diagram
            session.add_event(
                "diagram_built",
                {"kind": "attributes", "pair": [object_a, object_b], "links": len(diagram.links)},
                self.clock,
            )
            self._persist(session)
        return diagram

    def _candidate_or_raise(self, session: Session, name: str) -> ObjectCandidate:
        hit = session.find_candidate(name)
        if hit is None:
            raise UnknownObject(f"object {name!r} is not a stored candidate")
        return hit[1]

    def _build_attribute_diagram(
        self, session: Session, object_a: str, object_b: str
    ) -> AnalysisDiagram:
        ca = self._candidate_or_raise(session, object_a)
        cb = self._candidate_or_raise(session, object_b)
        if not ca.attributes or not cb.attributes:
            raise PreconditionConflict("both objects need attributes before attribute analysis")
        return self.scorer.build_diagram("attributes", ca.attributes, cb.attributes)

    # -- blending -------------------------------------------------------------------

    def _validate_pair(self, session: Session, pair: blend.BlendPair) -> None:
        ca = self._candidate_or_raise(session, pair.object_a)
        cb = self._candidate_or_raise(session, pair.object_b)
        concept_a = session.find_candidate(pair.object_a)[0]
        concept_b = session.find_candidate(pair.object_b)[0]
        if normalize(concept_a) == normalize(concept_b):
            raise PreconditionConflict("pick the two objects from different concepts")
        attrs_a = {normalize(a) for a in ca.attributes}
        attrs_b = {normalize(a) for a in cb.attributes}
        if normalize(pair.attribute_a) not in attrs_a:
            raise ValidationError(
                f"{pair.attribute_a!r} is not a stored attribute of {pair.object_a!r}"
            )
        if normalize(pair.attribute_b) not in attrs_b:
            raise ValidationError(
                f"{pair.attribute_b!r} is not a stored attribute of {pair.object_b!r}"
            )

    def generate_schemes(self, session_id: str, pair: blend.BlendPair, n: int | None = None):
        session = self.session(session_id)
        with self._lock_for(session_id):
            self._validate_pair(session, pair)
            schemes = blend.generate_schemes(self.oracle, pair, n or self.config.scheme_count)
            session.schemes = schemes
            session.schemes_pair = pair.to_dict()
            session.add_event(
                "schemes_generated",
                {"pair": pair.to_dict(), "schemes": [s.scheme for s in schemes]},
                self.clock,
            )
            self._persist(session)
        return schemes

    def compose_prompt(
        self,
        session_id: str,
        pair: blend.BlendPair,
        scheme_index: int,
        plan: blend.BlendPlan | None = None,
    ) -> blend.ImagePrompt:
        session = self.session(session_id)
        with self._lock_for(session_id):
            if session.theme is None:
                raise PreconditionConflict("infer the theme before composing prompts")
            if session.schemes_pair != pair.to_dict() or not session.schemes:
                raise PreconditionConflict("generate schemes for this pair first")
            if not 0 <= scheme_index < len(session.schemes):
                raise ValidationError(f"scheme index {scheme_index} out of range")
            self._validate_pair(session, pair)
            scheme = session.schemes[scheme_index]
            if plan is not None:
                prompt = blend.compose_multi_prompt(plan, scheme, session.theme)
            else:
                prompt = blend.compose_image_prompt(pair, scheme, session.theme)
            self._ensure_diagrams_cover(session, prompt)
            session.store_prompt(prompt)
            session.add_event(
                "prompt_composed", {"prompt_id": prompt.id, "text": prompt.text}, self.clock
            )
            self._persist(session)
        return prompt

    def _ensure_diagrams_cover(self, session: Session, prompt: blend.ImagePrompt) -> None:
        objects = session.diagrams.get("objects")
        if objects is None or objects.link(prompt.pair.object_a, prompt.pair.object_b) is None:
            concepts = session.expression.selected_concepts
            if len(concepts) >= 2:
                left = [c.name for c in session.candidates_for(concepts[0])]
                right = [c.name for c in session.candidates_for(concepts[1])]
                diagram = self.scorer.build_diagram("objects", left, right)
                if diagram.link(prompt.pair.object_a, prompt.pair.object_b) is None:
                    # cross pair outside the two concept lists (multi plans)
                    names = [prompt.pair.object_a, prompt.pair.object_b]
                    diagram = self.scorer.build_diagram("objects", names, names)
                session.diagrams["objects"] = diagram
            else:
                names = [prompt.pair.object_a, prompt.pair.object_b]
                session.diagrams["objects"] = self.scorer.build_diagram("objects", names, names)
        attributes = session.diagrams.get("attributes")
        if (
            attributes is None
            or attributes.link(prompt.pair.attribute_a, prompt.pair.attribute_b) is None
        ):
            session.diagrams["attributes"] = self._build_attribute_diagram(
                session, prompt.pair.object_a, prompt.pair.object_b
            )

    def generate_image(self, session_id: str, prompt_id: str) -> CanvasItem:
        session = self.session(session_id)
        with self._lock_for(session_id):
            prompt = session.find_prompt(prompt_id)
            if prompt.retired:
                raise PreconditionConflict(
                    f"prompt {prompt_id} references a replaced object; compose a new prompt"
                )
            artifact = self.oracle.generate_image(prompt.text)
            item = session.place_result(prompt, artifact, self.clock)
            self._persist(session)
        return item

    def preview_object(self, session_id: str, name: str) -> ImageArtifact:
        session = self.session(session_id)
        with self._lock_for(session_id):
            concept, candidate = session.find_candidate(name) or (None, None)
            if candidate is None:
                raise UnknownObject(f"object {name!r} is not a stored candidate")
            artifact = self.mapper.preview_object(candidate)
            candidate.preview_id = artifact.id
            session.add_event(
                "preview_generated", {"object": name, "artifact_id": artifact.id}, self.clock
            )
            self._persist(session)
        return artifact

    def replace_object(self, session_id: str, concept: str, old: str, new: str) -> Session:
        """Swap a candidate and discard the replaced object's canvas items."""
        session = self.session(session_id)
        with self._lock_for(session_id):
            key = session._concept_key(concept)
            cands = session.candidates.get(key, [])
            old_idx = next(
                (i for i, c in enumerate(cands) if normalize(c.name) == normalize(old)), None
            )
            if old_idx is None:
                raise UnknownObject(f"{old!r} is not a stored candidate of {concept!r}")
            if normalize(old) == normalize(new):
                log.warning("replace_object(%r -> %r) is a no-op", old, new)
                session.add_event(
                    "object_replaced",
                    {"concept": concept, "old": old, "new": new, "noop": True},
                    self.clock,
                )
                self._persist(session)
                return session

            rationale = self.mapper.describe_object(concept, new)
            candidate = ObjectCandidate(
                name=new,
                concept=concept,
                rationale=rationale,
                iteration=cands[old_idx].iteration,
            )
            candidate = self.mapper.suggest_attributes([candidate])[0]
            cands[old_idx] = candidate

            removed = session.remove_canvas_items_mentioning(old, self.clock)
            for prompt in session.prompts:
                if prompt.mentions(old):
                    prompt.retired = True
            session.add_event(
                "object_replaced",
                {"concept": concept, "old": old, "new": new, "removed_items": removed},
                self.clock,
            )

            # rebuild analysis; attribute diagram only survives if its pair does
            concepts = session.expression.selected_concepts
            if len(concepts) >= 2:
                left = [c.name for c in session.candidates_for(concepts[0])]
                right = [c.name for c in session.candidates_for(concepts[1])]
                if left and right:
                    session.diagrams["objects"] = self.scorer.build_diagram("objects", left, right)
            session.diagrams["attributes"] = None
            self._persist(session)
        return session

    def plan_multi(
        self, session_id: str, choices: dict[str, tuple[str, str]]
    ) -> tuple[blend.BlendPlan, AnalysisDiagram]:
        """Plan a >2-concept blend; builds a full cross diagram on demand."""
        session = self.session(session_id)
        with self._lock_for(session_id):
            concepts = session.expression.selected_concepts
            for concept, (obj, attr) in choices.items():
                if normalize(concept) not in {normalize(c) for c in concepts}:
                    raise ValidationError(f"{concept!r} is not a selected concept")
                cand = self._candidate_or_raise(session, obj)
                if normalize(attr) not in {normalize(a) for a in cand.attributes}:
                    raise ValidationError(f"{attr!r} is not a stored attribute of {obj!r}")
            names = [obj for obj, _ in choices.values()]
            diagram = self.scorer.build_diagram("objects", names, names)
            plan = blend.plan_multi_concept(list(choices), choices, diagram)
            session.add_event("plan_created", plan.to_dict(), self.clock)
            self._persist(session)
        return plan, diagram

    # -- misc --------------------------------------------------------------------

    def list_history(self, session_id: str) -> list[dict]:
        return self.session(session_id).list_history()

    def session_document(self, session_id: str) -> dict:
        return self.session(session_id).to_dict()

    def artifact_bytes(self, artifact_id: str) -> bytes:
        return self.artifacts.open_bytes(artifact_id)

    def save_to(self, session_id: str, path: str | Path) -> Path:
        return save_session(self.session(session_id), path)

"""Commonsense knowledge retrieval.

Talks to a ConceptNet-compatible REST API: the related-terms endpoint
first, then one-hop edge queries as a fallback when the related list runs
thin (objects: RelatedTo/IsA/AtLocation; attributes: HasProperty/RelatedTo).
Every successful query is cached on disk; offline mode reads the same file
format from a fixtures directory and treats a miss as a hard error.
"""

from __future__ import annotations

import json
import hashlib
import time
import urllib.parse
from dataclasses import dataclass
from pathlib import Path

from .clock import Clock, SystemClock
from .errors import KnowledgeUnavailable, RateLimited, ValidationError
from .expression import normalize

CACHE_SCHEMA_VERSION = 1
MAX_LIMIT = 100

OBJECT_RELATIONS = ("RelatedTo", "IsA", "AtLocation")
ATTRIBUTE_RELATIONS = ("HasProperty", "RelatedTo")


@dataclass(frozen=True)
class RelatedTerm:
    term: str
    weight: float
    relation: str | None = None

    def to_dict(self) -> dict:
        return {"term": self.term, "weight": self.weight, "relation": self.relation}

    @classmethod
    def from_dict(cls, d: dict) -> "RelatedTerm":
        return cls(d["term"], float(d["weight"]), d.get("relation"))


def _clean_term(raw: str) -> str:
    term = raw.rsplit("/c/en/", 1)[-1] if "/c/en/" in raw else raw
    term = term.split("/")[0]  # drop sense suffixes like /n/wn/food
    return normalize(term.replace("_", " "))


def query_key(seed: str, kind: str, limit: int) -> str:
    canonical = json.dumps(
        {"seed": normalize(seed), "kind": kind, "limit": limit},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def record_path(root: Path, kind: str, key: str) -> Path:
    return Path(root) / "knowledge" / f"{kind}-{key}.json"


class KnowledgeClient:
    def __init__(
        self,
        base_url: str = "https://api.conceptnet.io",
        cache_dir: str | Path = ".blendstudio/cache",
        *,
        offline: bool = False,
        fixtures_dir: str | Path | None = None,
        record: bool = False,
        timeout: float = 30.0,
        retries: int = 3,
        clock: Clock | None = None,
    ) -> None:
        self.base_url = base_url.rstrip("/")
        self.cache_dir = Path(cache_dir)
        self.offline = offline
        self.fixtures_dir = Path(fixtures_dir) if fixtures_dir else None
        self.record = record
        self.timeout = timeout
        self.retries = max(1, retries)
        self.clock = clock or SystemClock()

    # -- public API --------------------------------------------------------

    def related_objects(self, concept: str, limit: int = 50) -> list[RelatedTerm]:
        return self._query(concept, "objects", limit)

    def related_attributes(self, obj: str, limit: int) -> list[RelatedTerm]:
        return self._query(obj, "attributes", limit)

    # -- internals ----------------------------------------------------------

    def _query(self, seed: str, kind: str, limit: int) -> list[RelatedTerm]:
        if not seed or not seed.strip():
            raise ValidationError("knowledge query seed is empty")
        if not 1 <= limit <= MAX_LIMIT:
            raise ValidationError(f"limit must be in 1..{MAX_LIMIT}, got {limit}")
        key = query_key(seed, kind, limit)

        if self.offline:
            for root in (self.fixtures_dir, self.cache_dir):
                if root is None:
                    continue
                hit = self._read_record(record_path(root, kind, key))
                if hit is not None:
                    return hit
            raise KnowledgeUnavailable(
                f"offline mode has no recorded answer for {kind}({normalize(seed)!r}, {limit})"
            )

        cached = self._read_record(record_path(self.cache_dir, kind, key))
        if cached is not None:
            return cached

        terms = self._fetch(seed, kind, limit)
        self._write_record(record_path(self.cache_dir, kind, key), seed, kind, limit, terms)
        if self.record and self.fixtures_dir is not None:
            self._write_record(record_path(self.fixtures_dir, kind, key), seed, kind, limit, terms)
        return terms

    def _read_record(self, path: Path) -> list[RelatedTerm] | None:
        if not path.exists():
            return None
        data = json.loads(path.read_text(encoding="utf-8"))
        if data.get("schema_version") != CACHE_SCHEMA_VERSION:
            return None
        return [RelatedTerm.from_dict(t) for t in data["terms"]]

    def _write_record(
        self, path: Path, seed: str, kind: str, limit: int, terms: list[RelatedTerm]
    ) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        record = {
            "schema_version": CACHE_SCHEMA_VERSION,
            "query": {"seed": normalize(seed), "kind": kind, "limit": limit},
            "retrieved_at": self.clock.now_iso(),
            "terms": [t.to_dict() for t in terms],
        }
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(record, ensure_ascii=False, indent=2), encoding="utf-8")
        tmp.replace(path)  # atomic; concurrent writers are last-writer-wins

    def _fetch(self, seed: str, kind: str, limit: int) -> list[RelatedTerm]:
        found = self._fetch_related(seed, limit)
        if len(found) < limit / 2:
            relations = OBJECT_RELATIONS if kind == "objects" else ATTRIBUTE_RELATIONS
            for rel in relations:
                found.extend(self._fetch_edges(seed, rel, limit))
        best: dict[str, RelatedTerm] = {}
        seed_norm = normalize(seed)
        for t in found:
            if not t.term or t.term == seed_norm:
                continue
            prev = best.get(t.term)
            if prev is None or t.weight > prev.weight:
                best[t.term] = t
        ordered = sorted(best.values(), key=lambda t: (-t.weight, t.term))
        return ordered[:limit]

    def _fetch_related(self, seed: str, limit: int) -> list[RelatedTerm]:
        node = urllib.parse.quote(normalize(seed).replace(" ", "_"))
        payload = self._get(f"{self.base_url}/related/c/en/{node}", {"filter": "/c/en", "limit": limit})
        out = []
        for entry in payload.get("related", []):
            rid = entry.get("@id", "")
            if not rid.startswith("/c/en/"):
                continue
            term = _clean_term(rid)
            if term:
                out.append(RelatedTerm(term=term, weight=float(entry.get("weight", 0.0))))
        return out

    def _fetch_edges(self, seed: str, relation: str, limit: int) -> list[RelatedTerm]:
        node = f"/c/en/{normalize(seed).replace(' ', '_')}"
        payload = self._get(
            f"{self.base_url}/query", {"node": node, "rel": f"/r/{relation}", "limit": limit}
        )
        out = []
        for edge in payload.get("edges", []):
            start, end = edge.get("start", {}), edge.get("end", {})
            other = end if start.get("@id", "").startswith(node) else start
            oid = other.get("@id", "")
            if not oid.startswith("/c/en/") and other.get("language") != "en":
                continue
            term = _clean_term(oid or other.get("label", ""))
            if term:
                out.append(
                    RelatedTerm(term=term, weight=float(edge.get("weight", 0.0)), relation=relation)
                )
        return out

    def _get(self, url: str, params: dict) -> dict:
        import httpx

        last_exc: Exception | None = None
        for attempt in range(self.retries):
            try:
                resp = httpx.get(url, params=params, timeout=self.timeout)
                if resp.status_code == 429:
                    retry_after = resp.headers.get("Retry-After")
                    raise RateLimited(
                        "knowledge base rate limit",
                        retry_after=float(retry_after) if retry_after else None,
                    )
                if resp.status_code >= 500:
                    raise KnowledgeUnavailable(f"knowledge base returned {resp.status_code}")
                resp.raise_for_status()
                return resp.json()
            except RateLimited:
                raise
            except Exception as exc:
                last_exc = exc
            time.sleep(min(2.0, 0.25 * 2**attempt))
        raise KnowledgeUnavailable(f"knowledge query failed after {self.retries} attempts: {last_exc}")

"""Deterministic analysis core.

Text embeddings, cosine similarity, Min-Max normalization, sentiment
scoring with confidence mapping, pair averaging, quantile normalization,
and the node-link diagram (Sankey) construction the UI renders.

Each diagram normalizes independently: object links and attribute links
are never comparable across diagrams.
"""

from __future__ import annotations

import hashlib
import json
import threading
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Protocol, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EmbeddingUnavailable,
    SentimentUnavailable,
    ZeroVector,
)
from .expression import normalize

POSITIVE = "positive"
NEGATIVE = "negative"

# sentiment gradient endpoints, negative -> positive
OBJECTS_PALETTE = ("#7B61C4", "#E8963C")
ATTRIBUTES_PALETTE = ("#4CAF7D", "#D9A521")
PALETTES = {"objects": OBJECTS_PALETTE, "attributes": ATTRIBUTES_PALETTE}

DIAGRAM_SCHEMA_VERSION = 1


# --- domain types ---------------------------------------------------------

@dataclass(frozen=True)
class EmbeddingVector:
    values: tuple[float, ...]
    dim: int
    provider_tag: str

    def __post_init__(self) -> None:
        if len(self.values) != self.dim:
            raise DimensionMismatch(f"vector has {len(self.values)} entries, dim says {self.dim}")
        if not all(np.isfinite(self.values)):
            raise ValueError("embedding contains non-finite entries")


@dataclass(frozen=True)
class SentimentScore:
    label: str
    confidence: float
    score: float

    @classmethod
    def from_classification(cls, label: str, confidence: float) -> "SentimentScore":
        if label not in (POSITIVE, NEGATIVE):
            raise SentimentUnavailable(f"unknown sentiment label {label!r}")
        if not 0.0 <= confidence <= 1.0:
            raise SentimentUnavailable(f"confidence {confidence} outside [0, 1]")
        score = confidence if label == POSITIVE else 1.0 - confidence
        return cls(label=label, confidence=confidence, score=score)


@dataclass
class PairScore:
    a: str
    b: str
    raw_sim: float
    raw_sent: float
    norm_sim: float | None = None
    norm_sent: float | None = None


@dataclass
class AnalysisDiagram:
    kind: str  # "objects" | "attributes"
    left: list[str]
    right: list[str]
    links: list[PairScore]
    palette: tuple[str, str]

    def link(self, a: str, b: str) -> PairScore | None:
        """Lookup by endpoint pair, either orientation."""
        an, bn = normalize(a), normalize(b)
        for l in self.links:
            ln, rn = normalize(l.a), normalize(l.b)
            if (ln, rn) == (an, bn) or (ln, rn) == (bn, an):
                return l
        return None

    def to_dict(self) -> dict:
        nodes = [{"id": f"L:{t}", "label": t, "side": "left"} for t in self.left]
        nodes += [{"id": f"R:{t}", "label": t, "side": "right"} for t in self.right]
        links = []
        for l in self.links:
            links.append(
                {
                    "source": f"L:{l.a}",
                    "target": f"R:{l.b}",
                    "raw_sim": l.raw_sim,
                    "width": l.norm_sim,
                    "raw_sent": l.raw_sent,
                    "norm_sent": l.norm_sent,
                    "color": interpolate_color(self.palette, l.norm_sent or 0.0),
                }
            )
        return {
            "schema_version": DIAGRAM_SCHEMA_VERSION,
            "kind": self.kind,
            "palette": {"negative": self.palette[0], "positive": self.palette[1]},
            "nodes": nodes,
            "links": links,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisDiagram":
        left = [n["label"] for n in d["nodes"] if n["side"] == "left"]
        right = [n["label"] for n in d["nodes"] if n["side"] == "right"]
        links = [
            PairScore(
                a=l["source"][2:],
                b=l["target"][2:],
                raw_sim=l["raw_sim"],
                raw_sent=l["raw_sent"],
                norm_sim=l["width"],
                norm_sent=l["norm_sent"],
            )
            for l in d["links"]
        ]
        return cls(
            kind=d["kind"],
            left=left,
            right=right,
            links=links,
            palette=(d["palette"]["negative"], d["palette"]["positive"]),
        )


# --- pure math ------------------------------------------------------------

def cosine_similarity(u: EmbeddingVector, v: EmbeddingVector) -> float:
    if u.dim != v.dim:
        raise DimensionMismatch(f"dims differ: {u.dim} vs {v.dim}")
    a = np.asarray(u.values, dtype=float)
    b = np.asarray(v.values, dtype=float)
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        raise ZeroVector("cosine similarity undefined for all-zero vector")
    value = float(np.dot(a, b) / (na * nb))
    return max(-1.0, min(1.0, value))


def minmax_normalize(values: Sequence[float]) -> list[float]:
    """Affine map onto [0,1]; all-equal inputs map to 0.5."""
    if not values:
        raise ValueError("minmax_normalize needs at least one value")
    if not all(np.isfinite(values)):
        raise ValueError("minmax_normalize requires finite values")
    lo, hi = min(values), max(values)
    if hi == lo:
        return [0.5] * len(values)
    span = hi - lo
    return [(v - lo) / span for v in values]


def quantile_normalize(values: Sequence[float]) -> list[float]:
    """Rank-based map onto the uniform grid i/(n-1); ties get the mean of
    their tied grid positions; a single value maps to 0.5."""
    n = len(values)
    if n == 0:
        raise ValueError("quantile_normalize needs at least one value")
    if n == 1:
        return [0.5]
    order = sorted(range(n), key=values.__getitem__)
    out = [0.0] * n
    i = 0
    while i < n:
        j = i
        while j + 1 < n and values[order[j + 1]] == values[order[i]]:
            j += 1
        tied_mean = (i + j) / 2.0 / (n - 1)
        for k in range(i, j + 1):
            out[order[k]] = tied_mean
        i = j + 1
    return out


def pair_sentiment(sa: SentimentScore, sb: SentimentScore) -> float:
    return (sa.score + sb.score) / 2.0


def interpolate_color(palette: tuple[str, str], t: float) -> str:
    """Linear blend between the palette endpoints at position t in [0,1]."""
    t = max(0.0, min(1.0, t))
    lo = [int(palette[0][i : i + 2], 16) for i in (1, 3, 5)]
    hi = [int(palette[1][i : i + 2], 16) for i in (1, 3, 5)]
    rgb = [round(l + (h - l) * t) for l, h in zip(lo, hi)]
    return "#{:02x}{:02x}{:02x}".format(*rgb)


# --- providers --------------------------------------------------------------

class EmbeddingProvider(Protocol):
    tag: str
    dim: int

    def embed(self, text: str) -> Sequence[float]: ...


class SentimentProvider(Protocol):
    def classify(self, text: str) -> tuple[str, float]:
        """Return (label, confidence)."""
        ...


class HashEmbeddingProvider:
    """Deterministic offline embeddings.

    Exact entries (recorded fixtures) win; anything else gets a vector
    derived from the SHA-256 of its normal form, so offline runs are fully
    reproducible without pinning every term in advance.
    """

    def __init__(
        self,
        dim: int = 16,
        entries: dict[str, Sequence[float]] | None = None,
        tag: str = "hash-v1",
    ) -> None:
        self.dim = dim
        self.tag = tag
        self._entries = {normalize(k): tuple(float(x) for x in v) for k, v in (entries or {}).items()}

    @classmethod
    def from_file(cls, path) -> "HashEmbeddingProvider":
        data = json.loads(open(path, encoding="utf-8").read())
        return cls(dim=data["dim"], entries=data.get("vectors", {}), tag=data.get("tag", "hash-v1"))

    def embed(self, text: str) -> Sequence[float]:
        key = normalize(text)
        hit = self._entries.get(key)
        if hit is not None:
            if len(hit) != self.dim:
                raise DimensionMismatch(f"fixture vector for {key!r} has dim {len(hit)}")
            return hit
        material = b""
        counter = 0
        while len(material) < self.dim * 8:
            material += hashlib.sha256(f"{key}\x00{counter}".encode("utf-8")).digest()
            counter += 1
        vals = []
        for i in range(self.dim):
            u = int.from_bytes(material[i * 8 : (i + 1) * 8], "big")
            vals.append(2.0 * (u / 2**64) - 1.0)
        return tuple(vals)


class HttpEmbeddingProvider:
    """Live provider speaking the documented contract:
    POST {base}/embed {"text": ...} -> {"vector": [...], "tag": "..."}."""

    def __init__(self, base_url: str, dim: int, api_key: str = "", timeout: float = 30.0):
        self.base_url = base_url.rstrip("/")
        self.dim = dim
        self.tag = "http"
        self._api_key = api_key
        self._timeout = timeout

    def embed(self, text: str) -> Sequence[float]:
        import httpx

        headers = {"Authorization": f"Bearer {self._api_key}"} if self._api_key else {}
        try:
            resp = httpx.post(
                f"{self.base_url}/embed", json={"text": text}, headers=headers, timeout=self._timeout
            )
            resp.raise_for_status()
            payload = resp.json()
        except Exception as exc:
            raise EmbeddingUnavailable(f"embedding request failed: {exc}") from exc
        self.tag = payload.get("tag", self.tag)
        return [float(x) for x in payload["vector"]]


class LexiconSentimentProvider:
    """Valence-lexicon fallback classifier.

    Mean word valence v in [-1,1] maps to (label, C) with C = 0.5 + |v|/2,
    so the derived score is 0.5 + v/2. Unknown words are neutral.
    """

    def __init__(self, lexicon: dict[str, float] | None = None) -> None:
        if lexicon is None:
            lexicon = json.loads(
                resources.files("blendstudio.data")
                .joinpath("valence_lexicon.json")
                .read_text("utf-8")
            )
        self._lexicon = {normalize(k): float(v) for k, v in lexicon.items()}

    def classify(self, text: str) -> tuple[str, float]:
        key = normalize(text)
        if key in self._lexicon:
            v = self._lexicon[key]
        else:
            vals = [self._lexicon[w] for w in key.split() if w in self._lexicon]
            v = sum(vals) / len(vals) if vals else 0.0
        label = POSITIVE if v >= 0.0 else NEGATIVE
        return label, 0.5 + abs(v) / 2.0


class StaticSentimentProvider:
    """Fixed (label, confidence) table, for stipulated test confidences."""

    def __init__(self, table: dict[str, tuple[str, float]], fallback: SentimentProvider | None = None):
        self._table = {normalize(k): v for k, v in table.items()}
        self._fallback = fallback or LexiconSentimentProvider()

    def classify(self, text: str) -> tuple[str, float]:
        key = normalize(text)
        if key in self._table:
            return self._table[key]
        return self._fallback.classify(text)


# --- scorer ----------------------------------------------------------------

@dataclass
class Scorer:
    """Caches embeddings/sentiments and assembles analysis diagrams."""

    embedder: EmbeddingProvider
    sentiments: SentimentProvider
    _embed_cache: dict[tuple[str, str], EmbeddingVector] = field(default_factory=dict)
    _sent_cache: dict[str, SentimentScore] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock)

    def embed(self, text: str) -> EmbeddingVector:
        if not text or not text.strip():
            raise ValueError("cannot embed empty text")
        key = (self.embedder.tag, normalize(text))
        with self._lock:
            hit = self._embed_cache.get(key)
        if hit is not None:
            return hit
        values = tuple(float(x) for x in self.embedder.embed(text))
        if len(values) != self.embedder.dim:
            raise DimensionMismatch(
                f"provider returned dim {len(values)}, expected {self.embedder.dim}"
            )
        vec = EmbeddingVector(values=values, dim=self.embedder.dim, provider_tag=self.embedder.tag)
        with self._lock:
            self._embed_cache[key] = vec
        return vec

    def sentiment(self, text: str) -> SentimentScore:
        if not text or not text.strip():
            raise ValueError("cannot score empty text")
        key = normalize(text)
        with self._lock:
            hit = self._sent_cache.get(key)
        if hit is not None:
            return hit
        label, confidence = self.sentiments.classify(text)
        score = SentimentScore.from_classification(label, confidence)
        with self._lock:
            self._sent_cache[key] = score
        return score

    def build_diagram(
        self, kind: str, left_items: Iterable[str], right_items: Iterable[str]
    ) -> AnalysisDiagram:
        """One link per (left x right) pair; norm_sim by min-max and
        norm_sent by quantile normalization, each over this diagram only."""
        left = _dedupe(left_items)
        right = _dedupe(right_items)
        if not left or not right:
            raise ValueError("diagram needs non-empty item lists on both sides")
        if kind not in PALETTES:
            raise ValueError(f"unknown diagram kind {kind!r}")
        vecs = {t: self.embed(t) for t in {*left, *right}}
        sents = {t: self.sentiment(t) for t in {*left, *right}}
        links = [
            PairScore(
                a=a,
                b=b,
                raw_sim=cosine_similarity(vecs[a], vecs[b]),
                raw_sent=pair_sentiment(sents[a], sents[b]),
            )
            for a in left
            for b in right
        ]
        norm_sims = minmax_normalize([l.raw_sim for l in links])
        norm_sents = quantile_normalize([l.raw_sent for l in links])
        for link, ns, nq in zip(links, norm_sims, norm_sents):
            link.norm_sim = ns
            link.norm_sent = nq
        return AnalysisDiagram(kind=kind, left=left, right=right, links=links, palette=PALETTES[kind])


def _dedupe(items: Iterable[str]) -> list[str]:
    seen: set[str] = set()
    out: list[str] = []
    for it in items:
        key = normalize(it)
        if key and key not in seen:
            seen.add(key)
            out.append(it)
    return out

"""On-disk store for generated images, keyed by prompt hash."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .clock import Clock, SystemClock
from .errors import UnknownArtifact


@dataclass(frozen=True)
class ImageArtifact:
    id: str
    prompt: str
    bytes_ref: str  # path to the stored image file
    created_at: str

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "prompt": self.prompt,
            "bytes_ref": self.bytes_ref,
            "created_at": self.created_at,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ImageArtifact":
        return cls(d["id"], d["prompt"], d["bytes_ref"], d["created_at"])


def artifact_id(prompt: str) -> str:
    return hashlib.sha256(prompt.encode("utf-8")).hexdigest()[:16]


class ArtifactStore:
    """Images land as ``<id>.png`` with a ``<id>.json`` sidecar recording
    the prompt verbatim. Storing the same prompt again reuses the entry."""

    def __init__(self, root: str | Path, clock: Clock | None = None) -> None:
        self.root = Path(root)
        self.clock = clock or SystemClock()

    def store(self, prompt: str, data: bytes) -> ImageArtifact:
        aid = artifact_id(prompt)
        self.root.mkdir(parents=True, exist_ok=True)
        png = self.root / f"{aid}.png"
        meta = self.root / f"{aid}.json"
        if meta.exists():
            return ImageArtifact.from_dict(json.loads(meta.read_text(encoding="utf-8")))
        tmp = png.with_suffix(".png.tmp")
        tmp.write_bytes(data)
        tmp.replace(png)
        artifact = ImageArtifact(
            id=aid, prompt=prompt, bytes_ref=str(png), created_at=self.clock.now_iso()
        )
        meta_tmp = meta.with_suffix(".json.tmp")
        meta_tmp.write_text(json.dumps(artifact.to_dict(), ensure_ascii=False, indent=2), "utf-8")
        meta_tmp.replace(meta)
        return artifact

    def get(self, aid: str) -> ImageArtifact:
        meta = self.root / f"{aid}.json"
        if not meta.exists():
            raise UnknownArtifact(f"no artifact {aid}")
        return ImageArtifact.from_dict(json.loads(meta.read_text(encoding="utf-8")))

    def open_bytes(self, aid: str) -> bytes:
        artifact = self.get(aid)
        path = Path(artifact.bytes_ref)
        if not path.exists():
            raise UnknownArtifact(f"artifact file missing: {path}")
        return path.read_bytes()

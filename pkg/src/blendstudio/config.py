"""Runtime configuration.

Precedence: explicit overrides (CLI flags) > environment variables >
config file > built-in defaults.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

ENV_VARS = {
    "oracle_api_key": "ORACLE_API_KEY",
    "image_api_key": "IMAGE_API_KEY",
    "knowledge_base_url": "KNOWLEDGE_BASE_URL",
    "cache_dir": "CACHE_DIR",
}


@dataclass
class Config:
    # providers
    oracle_base_url: str = "https://api.openai.com/v1"
    oracle_model: str = "gpt-3.5-turbo"
    oracle_api_key: str = ""
    image_base_url: str = "https://api.openai.com/v1"
    image_model: str = "dall-e-3"
    image_api_key: str = ""
    knowledge_base_url: str = "https://api.conceptnet.io"
    embedding_base_url: str = ""
    embedding_provider: str = "fixture"  # fixture | http
    # modes
    offline: bool = False
    record: bool = False
    fixtures_dir: str = ""
    # storage
    cache_dir: str = ".blendstudio/cache"
    data_dir: str = ".blendstudio/data"
    # oracle behaviour
    temperature: float = 0.7
    max_attempts: int = 3
    scheme_count: int = 3
    in_flight_limit: int = 4
    # knowledge
    related_limit: int = 50
    http_timeout: float = 30.0
    http_retries: int = 3

    extras: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def load(
        cls,
        config_file: str | Path | None = None,
        overrides: dict[str, Any] | None = None,
    ) -> "Config":
        values: dict[str, Any] = {}
        if config_file:
            try:
                values.update(json.loads(Path(config_file).read_text(encoding="utf-8")))
            except (OSError, json.JSONDecodeError) as exc:
                raise ValueError(f"unreadable config file {config_file}: {exc}") from exc
        for attr, env in ENV_VARS.items():
            if os.environ.get(env):
                values[attr] = os.environ[env]
        if overrides:
            values.update({k: v for k, v in overrides.items() if v is not None})
        known = {f.name for f in fields(cls) if f.name != "extras"}
        cfg = cls(**{k: v for k, v in values.items() if k in known})
        cfg.extras = {k: v for k, v in values.items() if k not in known}
        return cfg

    def cache_path(self) -> Path:
        return Path(self.cache_dir)

    def data_path(self) -> Path:
        return Path(self.data_dir)

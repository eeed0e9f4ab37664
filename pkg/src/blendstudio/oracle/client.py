"""Oracle client: render, dispatch, parse, retry.

A completion attempt fails when the response cannot be parsed or does not
satisfy the template's result contract; retries re-ask with temperature
stepped down toward 0 to coax schema compliance. Transport failures are
retried inside the providers and surface as OracleUnavailable.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable

from ..artifacts import ArtifactStore, ImageArtifact
from ..errors import (
    InvalidOracleResponse,
    ParseFailure,
    SchemaMismatch,
)
from .extract import extract_json_result
from .providers import ChatProvider, ChatRequest, ImageProvider
from .templates import render_template

Validator = Callable[[dict], None]  # raises SchemaMismatch to reject


@dataclass
class OracleResponse:
    text: str
    parsed: dict | None
    attempts: int


class Oracle:
    def __init__(
        self,
        chat: ChatProvider,
        images: ImageProvider,
        artifacts: ArtifactStore,
        *,
        temperature: float = 0.7,
        max_attempts: int = 3,
        in_flight_limit: int = 4,
    ) -> None:
        self.chat_provider = chat
        self.image_provider = images
        self.artifacts = artifacts
        self.temperature = temperature
        self.max_attempts = max(1, max_attempts)
        self._gate = threading.BoundedSemaphore(max(1, in_flight_limit))

    def render(self, template_id: str, bindings: dict[str, object]) -> str:
        return render_template(template_id, bindings)

    def _temperature_ladder(self, t0: float, attempts: int) -> list[float]:
        if attempts == 1:
            return [t0]
        return [t0 * (1.0 - i / (attempts - 1)) for i in range(attempts)]

    def complete(
        self,
        template_id: str,
        bindings: dict[str, object],
        *,
        extra_instructions: str | None = None,
        validator: Validator | None = None,
        max_attempts: int | None = None,
        temperature: float | None = None,
    ) -> OracleResponse:
        rendered = self.render(template_id, bindings)
        content = rendered if not extra_instructions else f"{rendered}\n\n{extra_instructions}"
        budget = max(1, max_attempts or self.max_attempts)
        ladder = self._temperature_ladder(
            self.temperature if temperature is None else temperature, budget
        )
        last_text = ""
        last_err: Exception | None = None
        for attempt in range(1, budget + 1):
            request = ChatRequest(
                template_id=template_id,
                bindings=bindings,
                extra=extra_instructions,
                messages=[{"role": "user", "content": content}],
                temperature=ladder[attempt - 1],
                attempt=attempt,
            )
            with self._gate:
                text = self.chat_provider.chat(request)
            last_text = text
            try:
                parsed = extract_json_result(text, template_id)
                if validator is not None:
                    validator(parsed)
                return OracleResponse(text=text, parsed=parsed, attempts=attempt)
            except (ParseFailure, SchemaMismatch) as exc:
                last_err = exc
        raise InvalidOracleResponse(
            f"{template_id} completion unusable after {budget} attempts: {last_err}",
            last_text=last_text,
            attempts=budget,
        )

    def generate_image(self, prompt: str) -> ImageArtifact:
        if not prompt or not prompt.strip():
            raise ValueError("image prompt is empty")
        with self._gate:
            data = self.image_provider.generate(prompt)
        return self.artifacts.store(prompt, data)

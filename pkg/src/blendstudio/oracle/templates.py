"""The five prompt templates, stored as immutable resources.

The template texts are checked-in verbatim resources; any edit requires
regenerating the golden files under tests/golden. Rendering substitutes
{name} placeholders, unescapes {{ }} literals, and (for the schemes
template) fills the parenthesized NUM slot.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

from ..errors import MissingBinding

TEMPLATE_IDS = ("theme", "objects", "attributes", "schemes", "image")

# theme/objects/attributes/schemes are five-section chat scripts; image is a
# single composed string handed to the image model.
CHAT_TEMPLATE_IDS = ("theme", "objects", "attributes", "schemes")

_PLACEHOLDER_RE = re.compile(r"\{\{|\}\}|\{([^{}]+)\}")


@lru_cache(maxsize=None)
def template_text(template_id: str) -> str:
    if template_id not in TEMPLATE_IDS:
        raise KeyError(f"unknown template {template_id!r}")
    return (
        resources.files("blendstudio.resources.templates")
        .joinpath(f"{template_id}.txt")
        .read_text("utf-8")
    )


@lru_cache(maxsize=None)
def placeholders(template_id: str) -> frozenset[str]:
    names = {m.group(1) for m in _PLACEHOLDER_RE.finditer(template_text(template_id)) if m.group(1)}
    if template_id == "schemes":
        names.add("NUM")  # appears as (NUM), not brace-wrapped
    return frozenset(names)


def render_template(template_id: str, bindings: dict[str, object]) -> str:
    """Substitute every placeholder; the result has no unresolved slots."""
    text = template_text(template_id)
    missing = [n for n in sorted(placeholders(template_id)) if n not in bindings]
    if missing:
        raise MissingBinding(missing[0])

    def sub(m: re.Match) -> str:
        tok = m.group(0)
        if tok == "{{":
            return "{"
        if tok == "}}":
            return "}"
        return str(bindings[m.group(1)])

    rendered = _PLACEHOLDER_RE.sub(sub, text)
    if template_id == "schemes":
        rendered = rendered.replace("(NUM)", f"({bindings['NUM']})")
    return rendered

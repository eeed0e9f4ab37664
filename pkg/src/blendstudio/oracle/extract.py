"""Pull the structured result out of a raw completion.

Completions arrive with prose prefixes, markdown fences, or trailing
chatter; the extractor scans for the first balanced object literal that
parses, then validates it against the per-template result contract.
"""

from __future__ import annotations

import json
from typing import Any

from ..errors import ParseFailure, SchemaMismatch


def _balanced_spans(text: str):
    """Yield substrings for each balanced {...} region, in textual order."""
    i = 0
    n = len(text)
    while i < n:
        if text[i] != "{":
            i += 1
            continue
        depth = 0
        in_string = False
        escape = False
        for j in range(i, n):
            c = text[j]
            if in_string:
                if escape:
                    escape = False
                elif c == "\\":
                    escape = True
                elif c == '"':
                    in_string = False
            elif c == '"':
                in_string = True
            elif c == "{":
                depth += 1
            elif c == "}":
                depth -= 1
                if depth == 0:
                    yield text[i : j + 1]
                    break
        else:
            return  # unbalanced to end of text
        i += 1


def first_json_object(text: str) -> Any:
    for span in _balanced_spans(text):
        try:
            return json.loads(span)
        except json.JSONDecodeError:
            continue
    raise ParseFailure("no parseable JSON object found in completion")


def _require_row(row: Any, length: int, where: str) -> list[str]:
    if not isinstance(row, list) or len(row) != length:
        raise SchemaMismatch(f"{where}: expected a list of {length} strings, got {row!r}")
    out = []
    for cell in row:
        if not isinstance(cell, str) or not cell.strip():
            raise SchemaMismatch(f"{where}: empty or non-string cell {cell!r}")
        out.append(cell)
    return out


def validate_result(template_id: str, payload: Any) -> dict:
    if not isinstance(payload, dict) or "result" not in payload:
        raise SchemaMismatch("payload is not an object with a 'result' key")
    result = payload["result"]
    if template_id == "theme":
        if not isinstance(result, str) or not result.strip():
            raise SchemaMismatch("theme result must be a non-empty string")
    elif template_id == "objects":
        if not isinstance(result, list) or len(result) != 5:
            raise SchemaMismatch(f"objects result must have exactly 5 rows, got {len(result) if isinstance(result, list) else result!r}")
        for k, row in enumerate(result):
            _require_row(row, 2, f"objects row {k}")
    elif template_id == "attributes":
        if not isinstance(result, list) or not result:
            raise SchemaMismatch("attributes result must be a non-empty list")
        for k, row in enumerate(result):
            _require_row(row, 6, f"attributes row {k}")
    elif template_id == "schemes":
        if not isinstance(result, list) or not result:
            raise SchemaMismatch("schemes result must be a non-empty list")
        for k, row in enumerate(result):
            _require_row(row, 2, f"schemes row {k}")
    else:
        raise SchemaMismatch(f"no result contract for template {template_id!r}")
    return payload


def extract_json_result(text: str, schema_id: str) -> dict:
    """First balanced JSON object in ``text``, validated for ``schema_id``."""
    return validate_result(schema_id, first_json_object(text))

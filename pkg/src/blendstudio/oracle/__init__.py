from .client import Oracle, OracleResponse
from .extract import extract_json_result, first_json_object, validate_result
from .providers import (
    ChatProvider,
    ChatRequest,
    FixtureChatProvider,
    HttpChatProvider,
    HttpImageProvider,
    ImageProvider,
    PlaceholderImageProvider,
    RecordingChatProvider,
    fixture_key,
    fixture_path,
    solid_png,
)
from .templates import (
    CHAT_TEMPLATE_IDS,
    TEMPLATE_IDS,
    placeholders,
    render_template,
    template_text,
)

__all__ = [
    "Oracle",
    "OracleResponse",
    "extract_json_result",
    "first_json_object",
    "validate_result",
    "ChatProvider",
    "ChatRequest",
    "FixtureChatProvider",
    "HttpChatProvider",
    "HttpImageProvider",
    "ImageProvider",
    "PlaceholderImageProvider",
    "RecordingChatProvider",
    "fixture_key",
    "fixture_path",
    "solid_png",
    "CHAT_TEMPLATE_IDS",
    "TEMPLATE_IDS",
    "placeholders",
    "render_template",
    "template_text",
]

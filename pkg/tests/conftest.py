import socket
from pathlib import Path

import pytest

from blendstudio.artifacts import ArtifactStore
from blendstudio.config import Config
from blendstudio.engine import Engine
from blendstudio.oracle import Oracle, PlaceholderImageProvider

FIXTURES_DIR = Path(__file__).parent / "fixtures"
GOLDEN_DIR = Path(__file__).parent / "golden"


class StubChat:
    """In-memory chat provider: replays scripted responses in call order,
    repeating the last one; records every request for inspection."""

    def __init__(self, responses):
        self.responses = list(responses)
        self.requests = []

    def chat(self, request):
        self.requests.append(request)
        index = min(len(self.requests) - 1, len(self.responses) - 1)
        return self.responses[index]


class FailingImageProvider:
    def __init__(self, exc):
        self.exc = exc

    def generate(self, prompt):
        raise self.exc


@pytest.fixture
def offline_config(tmp_path):
    return Config(
        offline=True,
        fixtures_dir=str(FIXTURES_DIR),
        data_dir=str(tmp_path / "data"),
        cache_dir=str(tmp_path / "cache"),
    )


@pytest.fixture
def engine(offline_config):
    return Engine(offline_config)


@pytest.fixture
def make_oracle(tmp_path):
    def _make(responses, **kwargs):
        store = ArtifactStore(tmp_path / "artifacts")
        return Oracle(StubChat(responses), PlaceholderImageProvider(), store, **kwargs)

    return _make


@pytest.fixture
def no_network(monkeypatch):
    """Creating an INET socket fails the test (AF_UNIX stays allowed so the
    asyncio event loop's self-pipe keeps working)."""

    real_socket = socket.socket

    class GuardedSocket(socket.socket):
        def __init__(self, family=socket.AF_INET, *args, **kwargs):
            if family in (socket.AF_INET, socket.AF_INET6):
                raise AssertionError("network access attempted during an offline test")
            super().__init__(family, *args, **kwargs)

    def no_connection(*args, **kwargs):
        raise AssertionError("network access attempted during an offline test")

    monkeypatch.setattr(socket, "socket", GuardedSocket)
    monkeypatch.setattr(socket, "create_connection", no_connection)
    return real_socket

import json

import httpx
import pytest

from blendstudio.errors import KnowledgeUnavailable, RateLimited, ValidationError
from blendstudio.knowledge import KnowledgeClient, RelatedTerm, query_key, record_path

from conftest import FIXTURES_DIR


@pytest.fixture
def offline_client(tmp_path):
    return KnowledgeClient(
        cache_dir=tmp_path / "cache", offline=True, fixtures_dir=FIXTURES_DIR
    )


def test_vitamins_fixture_has_orange_near_top(offline_client, no_network):
    terms = offline_client.related_objects("vitamins", 50)
    names = [t.term for t in terms]
    assert "orange" in names[:3]
    weights = [t.weight for t in terms]
    assert weights == sorted(weights, reverse=True)


def test_limit_is_respected_and_sorted(offline_client, no_network):
    terms = offline_client.related_objects("exercise", 3)
    assert 0 < len(terms) <= 3
    weights = [t.weight for t in terms]
    assert weights == sorted(weights, reverse=True)


def test_unknown_term_yields_empty_list_not_error(offline_client, no_network):
    assert offline_client.related_objects("zzxqv-nonword", 50) == []


def test_offline_miss_is_a_hard_error(offline_client, no_network):
    with pytest.raises(KnowledgeUnavailable):
        offline_client.related_objects("never-recorded-term", 50)


def test_precondition_validation(offline_client):
    with pytest.raises(ValidationError):
        offline_client.related_attributes("", 10)
    with pytest.raises(ValidationError):
        offline_client.related_objects("orange", 0)
    with pytest.raises(ValidationError):
        offline_client.related_objects("orange", 101)


def test_attribute_fixture_contains_property_words(offline_client, no_network):
    terms = offline_client.related_attributes("orange", 10)
    names = [t.term for t in terms]
    assert "round" in names and "juicy" in names
    assert all(t.relation == "HasProperty" for t in terms)


def test_determinism_under_warm_cache(offline_client, no_network):
    first = offline_client.related_objects("vitamins", 50)
    second = offline_client.related_objects("vitamins", 50)
    assert [t.to_dict() for t in first] == [t.to_dict() for t in second]


# --- live-path behaviour with a faked transport --------------------------------

class FakeResponses:
    """Monkeypatched httpx.get returning canned payloads and counting calls."""

    def __init__(self, payloads, status=200, headers=None):
        self.payloads = payloads
        self.calls = []
        self.status = status
        self.headers = headers or {}

    def __call__(self, url, params=None, timeout=None):
        self.calls.append((url, dict(params or {})))
        request = httpx.Request("GET", url)
        if isinstance(self.payloads, dict) and self.payloads is not None and self.payloads != {}:
            for fragment, payload in self.payloads.items():
                if fragment in url:
                    return httpx.Response(200, json=payload, request=request)
            return httpx.Response(200, json={}, request=request)
        return httpx.Response(
            self.status, json=self.payloads or {}, headers=self.headers, request=request
        )


def live_client(tmp_path, **kw):
    return KnowledgeClient(
        "https://kb.example", cache_dir=tmp_path / "cache", retries=2, **kw
    )


def test_related_endpoint_parsing_and_cache_hit(tmp_path, monkeypatch):
    fake = FakeResponses(
        {"/related/": {"related": [
            {"@id": "/c/en/orange", "weight": 0.9},
            {"@id": "/c/en/orange_juice", "weight": 0.7},
            {"@id": "/c/fr/orange", "weight": 0.95},
        ] * 9}}  # enough entries to skip the edge fallback
    )
    monkeypatch.setattr(httpx, "get", fake)
    client = live_client(tmp_path)
    terms = client.related_objects("vitamins", 10)
    assert terms[0] == RelatedTerm("orange", 0.9)
    assert RelatedTerm("orange juice", 0.7) in terms  # underscores become spaces
    assert all(not t.term.startswith("/c/") for t in terms)
    calls_after_first = len(fake.calls)

    again = client.related_objects("vitamins", 10)
    assert len(fake.calls) == calls_after_first  # served from cache
    assert [t.to_dict() for t in again] == [t.to_dict() for t in terms]


def test_edge_fallback_when_related_is_thin(tmp_path, monkeypatch):
    fake = FakeResponses(
        {
            "/related/": {"related": [{"@id": "/c/en/orange", "weight": 0.9}]},
            "/query": {"edges": [
                {"start": {"@id": "/c/en/vitamins", "language": "en"},
                 "end": {"@id": "/c/en/carrot", "language": "en"},
                 "rel": {"label": "RelatedTo"}, "weight": 2.0},
            ]},
        }
    )
    monkeypatch.setattr(httpx, "get", fake)
    client = live_client(tmp_path)
    terms = client.related_objects("vitamins", 10)
    names = {t.term for t in terms}
    assert {"orange", "carrot"} <= names
    edge_calls = [c for c in fake.calls if "/query" in c[0]]
    rels = {c[1]["rel"] for c in edge_calls}
    assert rels == {"/r/RelatedTo", "/r/IsA", "/r/AtLocation"}


def test_attribute_kind_uses_property_relations(tmp_path, monkeypatch):
    fake = FakeResponses({"/related/": {"related": []}, "/query": {"edges": []}})
    monkeypatch.setattr(httpx, "get", fake)
    client = live_client(tmp_path)
    client.related_attributes("orange", 10)
    rels = {c[1]["rel"] for c in fake.calls if "/query" in c[0]}
    assert rels == {"/r/HasProperty", "/r/RelatedTo"}


def test_rate_limit_surfaces_retry_after(tmp_path, monkeypatch):
    fake = FakeResponses(None, status=429, headers={"Retry-After": "7"})
    monkeypatch.setattr(httpx, "get", fake)
    client = live_client(tmp_path)
    with pytest.raises(RateLimited) as err:
        client.related_objects("vitamins", 10)
    assert err.value.retry_after == 7.0


def test_server_errors_exhaust_retries(tmp_path, monkeypatch):
    fake = FakeResponses(None, status=500)
    monkeypatch.setattr(httpx, "get", fake)
    monkeypatch.setattr("time.sleep", lambda *_: None)
    client = live_client(tmp_path)
    with pytest.raises(KnowledgeUnavailable):
        client.related_objects("vitamins", 10)
    assert len(fake.calls) == 2  # retries=2


def test_dedup_keeps_highest_weight(tmp_path, monkeypatch):
    fake = FakeResponses(
        {"/related/": {"related": [
            {"@id": "/c/en/orange", "weight": 0.5},
            {"@id": "/c/en/Orange", "weight": 0.8},
        ] * 6}}
    )
    monkeypatch.setattr(httpx, "get", fake)
    client = live_client(tmp_path)
    terms = client.related_objects("vitamins", 10)
    oranges = [t for t in terms if t.term == "orange"]
    assert len(oranges) == 1 and oranges[0].weight == 0.8


def test_record_mode_writes_fixture_copy(tmp_path, monkeypatch):
    fake = FakeResponses({"/related/": {"related": [{"@id": "/c/en/orange", "weight": 0.9}] * 8}})
    monkeypatch.setattr(httpx, "get", fake)
    fixtures = tmp_path / "captured"
    client = live_client(tmp_path, record=True, fixtures_dir=fixtures)
    client.related_objects("vitamins", 10)
    path = record_path(fixtures, "objects", query_key("vitamins", "objects", 10))
    record = json.loads(path.read_text())
    assert record["query"] == {"seed": "vitamins", "kind": "objects", "limit": 10}
    assert record["terms"][0]["term"] == "orange"

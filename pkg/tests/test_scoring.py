import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from blendstudio.errors import DimensionMismatch, ZeroVector
from blendstudio.scoring import (
    ATTRIBUTES_PALETTE,
    OBJECTS_PALETTE,
    EmbeddingVector,
    HashEmbeddingProvider,
    LexiconSentimentProvider,
    Scorer,
    SentimentScore,
    cosine_similarity,
    interpolate_color,
    minmax_normalize,
    pair_sentiment,
    quantile_normalize,
)


def vec(*values):
    return EmbeddingVector(values=tuple(float(v) for v in values), dim=len(values), provider_tag="t")


def brute_quantile(values):
    """Independent rank oracle: average the grid positions each value
    occupies in the sorted order."""
    n = len(values)
    if n == 1:
        return [0.5]
    ordered = sorted(values)
    out = []
    for x in values:
        positions = [i for i, v in enumerate(ordered) if v == x]
        out.append(sum(p / (n - 1) for p in positions) / len(positions))
    return out


# --- cosine ------------------------------------------------------------------

def test_cosine_hand_computed():
    # dot = 1*2 + 2*1 + 2*2 = 8; |u| = |v| = 3
    assert cosine_similarity(vec(1, 2, 2), vec(2, 1, 2)) == pytest.approx(8 / 9, abs=1e-12)


def test_cosine_identity_and_orthogonal():
    u = vec(0.3, -0.7, 2.1)
    assert cosine_similarity(u, u) == pytest.approx(1.0, abs=1e-12)
    assert cosine_similarity(vec(1, 0), vec(0, 1)) == pytest.approx(0.0, abs=1e-12)


def test_cosine_errors():
    with pytest.raises(DimensionMismatch):
        cosine_similarity(vec(1, 2), vec(1, 2, 3))
    with pytest.raises(ZeroVector):
        cosine_similarity(vec(0, 0), vec(1, 1))


finite_components = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)
nonzero_vectors = (
    st.integers(min_value=2, max_value=8)
    .flatmap(lambda d: st.lists(finite_components, min_size=d, max_size=d))
    .filter(lambda vals: math.sqrt(sum(v * v for v in vals)) > 1e-6)
)


@settings(max_examples=300)
@given(nonzero_vectors, nonzero_vectors)
def test_cosine_bounds_and_symmetry(a, b):
    if len(a) != len(b):
        b = (b * len(a))[: len(a)]
        if math.sqrt(sum(v * v for v in b)) <= 1e-6:
            return
    u, v = vec(*a), vec(*b)
    s = cosine_similarity(u, v)
    assert -1.0 <= s <= 1.0
    assert s == cosine_similarity(v, u)


@settings(max_examples=300)
@given(nonzero_vectors, st.floats(min_value=1e-3, max_value=1e3))
def test_cosine_scale_invariance(a, alpha):
    u = vec(*a)
    scaled = vec(*[alpha * x for x in a])
    assert cosine_similarity(scaled, u) == pytest.approx(cosine_similarity(u, u), abs=1e-9)


# --- minmax ---------------------------------------------------------------------

def test_minmax_examples():
    assert minmax_normalize([0.2, 0.5, 0.8]) == pytest.approx([0.0, 0.5, 1.0], abs=1e-12)
    assert minmax_normalize([0.4, 0.4]) == [0.5, 0.5]


def test_minmax_empty_rejected():
    with pytest.raises(ValueError):
        minmax_normalize([])


@settings(max_examples=300)
@given(st.lists(st.floats(min_value=-1e6, max_value=1e6), min_size=1, max_size=20))
def test_minmax_laws(xs):
    out = minmax_normalize(xs)
    assert all(0.0 <= v <= 1.0 for v in out)
    if max(xs) > min(xs):
        assert out[xs.index(min(xs))] == 0.0
        assert out[xs.index(max(xs))] == 1.0
    else:
        assert out == [0.5] * len(xs)
    for i in range(len(xs)):
        for j in range(len(xs)):
            if xs[i] < xs[j]:
                assert out[i] < out[j] + 1e-15


@settings(max_examples=200)
@given(st.lists(st.floats(min_value=-100, max_value=100), min_size=1, max_size=10), st.randoms())
def test_minmax_is_pointwise(xs, rng):
    order = list(range(len(xs)))
    rng.shuffle(order)
    permuted = [xs[i] for i in order]
    base = minmax_normalize(xs)
    assert minmax_normalize(permuted) == [base[i] for i in order]


# --- quantile ----------------------------------------------------------------------

def test_quantile_examples():
    assert quantile_normalize([0.9, 0.1, 0.5]) == [1.0, 0.0, 0.5]
    assert quantile_normalize([0.3, 0.3, 0.9]) == [0.25, 0.25, 1.0]
    assert quantile_normalize([0.7]) == [0.5]


@settings(max_examples=500)
@given(st.lists(st.integers(min_value=0, max_value=5).map(float), min_size=1, max_size=8))
def test_quantile_matches_brute_oracle(xs):
    got = quantile_normalize(xs)
    want = brute_quantile(xs)
    assert got == pytest.approx(want, abs=1e-12)


@settings(max_examples=300)
@given(st.lists(st.floats(min_value=-50, max_value=50), min_size=2, max_size=12))
def test_quantile_laws(xs):
    out = quantile_normalize(xs)
    assert all(0.0 <= v <= 1.0 for v in out)
    for i in range(len(xs)):
        for j in range(len(xs)):
            if xs[i] < xs[j]:
                assert out[i] < out[j]
            elif xs[i] == xs[j]:
                assert out[i] == out[j]


# --- sentiment ------------------------------------------------------------------------

def test_sentiment_confidence_mapping():
    assert SentimentScore.from_classification("positive", 0.98).score == 0.98
    assert SentimentScore.from_classification("negative", 0.90).score == pytest.approx(0.10, abs=1e-12)
    assert SentimentScore.from_classification("positive", 0.5).score == 0.5
    assert SentimentScore.from_classification("negative", 0.5).score == 0.5


@settings(max_examples=300)
@given(st.floats(min_value=0, max_value=1), st.sampled_from(["positive", "negative"]))
def test_sentiment_mapping_exact(c, label):
    s = SentimentScore.from_classification(label, c)
    assert s.score == (c if label == "positive" else 1.0 - c)


def test_pair_sentiment_mean_and_commutativity():
    a = SentimentScore.from_classification("positive", 0.8)
    b = SentimentScore.from_classification("positive", 0.4)
    assert pair_sentiment(a, b) == pytest.approx(0.6, abs=1e-12)
    assert pair_sentiment(a, b) == pair_sentiment(b, a)
    assert pair_sentiment(a, a) == a.score


def test_lexicon_provider_is_deterministic_and_signed():
    lex = LexiconSentimentProvider()
    assert lex.classify("sunshine") == lex.classify("sunshine")
    label_pos, c_pos = lex.classify("wonderful sunshine")
    label_neg, c_neg = lex.classify("dark disaster")
    assert label_pos == "positive" and c_pos > 0.5
    assert label_neg == "negative" and c_neg > 0.5
    assert lex.classify("qqqq zzzz") == ("positive", 0.5)  # unknown words are neutral


# --- providers & diagrams ------------------------------------------------------------

def test_hash_embedding_deterministic():
    p = HashEmbeddingProvider(dim=8)
    assert p.embed("orange") == p.embed("orange")
    assert p.embed("orange") == p.embed("  Orange ")  # normalized key
    assert p.embed("orange") != p.embed("apple")


def test_scorer_embed_validates_and_caches():
    provider = HashEmbeddingProvider(dim=8)
    scorer = Scorer(embedder=provider, sentiments=LexiconSentimentProvider())
    v1 = scorer.embed("orange")
    v2 = scorer.embed("orange")
    assert v1 is v2
    with pytest.raises(ValueError):
        scorer.embed("   ")


def test_scorer_rejects_dim_drift():
    class DriftingProvider:
        tag = "drift"
        dim = 4

        def embed(self, text):
            return [1.0, 2.0, 3.0]  # wrong length

    scorer = Scorer(embedder=DriftingProvider(), sentiments=LexiconSentimentProvider())
    with pytest.raises(DimensionMismatch):
        scorer.embed("anything")


@pytest.fixture
def scorer():
    return Scorer(embedder=HashEmbeddingProvider(dim=8), sentiments=LexiconSentimentProvider())


def test_diagram_link_count_and_width_law(scorer):
    d = scorer.build_diagram("objects", ["sun", "moon"], ["lamp", "candle", "mirror"])
    assert len(d.links) == 6
    widths = [l.norm_sim for l in d.links]
    raws = [l.raw_sim for l in d.links]
    assert widths[raws.index(max(raws))] == 1.0
    assert widths[raws.index(min(raws))] == 0.0
    assert all(0.0 <= l.norm_sent <= 1.0 for l in d.links)


def test_diagram_palettes(scorer):
    d_obj = scorer.build_diagram("objects", ["sun"], ["moon", "storm"])
    d_attr = scorer.build_diagram("attributes", ["round"], ["bright", "dark"])
    assert d_obj.palette == OBJECTS_PALETTE
    assert d_attr.palette == ATTRIBUTES_PALETTE
    with pytest.raises(ValueError):
        scorer.build_diagram("other", ["a"], ["b"])


def test_diagram_serialization_is_stable_and_independent(scorer):
    objects = scorer.build_diagram("objects", ["sun", "moon"], ["lamp", "mirror"])
    before = objects.to_json()
    scorer.build_diagram("attributes", ["bright", "glowing"], ["dark", "round"])
    assert objects.to_json() == before
    again = scorer.build_diagram("objects", ["sun", "moon"], ["lamp", "mirror"])
    assert again.to_json() == before


def test_diagram_round_trip(scorer):
    d = scorer.build_diagram("objects", ["sun", "moon"], ["lamp"])
    from blendstudio.scoring import AnalysisDiagram

    back = AnalysisDiagram.from_dict(json.loads(d.to_json()))
    assert back.to_json() == d.to_json()


def test_diagram_lookup_both_orientations(scorer):
    d = scorer.build_diagram("objects", ["sun"], ["moon"])
    assert d.link("sun", "moon") is d.link("moon", "sun")
    assert d.link("sun", "venus") is None


def test_interpolate_color_endpoints():
    assert interpolate_color(OBJECTS_PALETTE, 0.0) == OBJECTS_PALETTE[0].lower()
    assert interpolate_color(OBJECTS_PALETTE, 1.0) == OBJECTS_PALETTE[1].lower()
    mid = interpolate_color(("#000000", "#ffffff"), 0.5)
    assert mid == "#808080"

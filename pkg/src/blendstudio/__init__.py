"""blendstudio: visual-blend ideation engine.

Maps abstract expressions onto metaphorically related physical objects and
attributes (commonsense knowledge base + language-model oracle), scores
object/attribute pairs by embedding similarity and sentiment, composes
blending schemes and text-to-image prompts, and tracks the exploration in
durable sessions served over HTTP.
"""

__version__ = "0.1.0"

from .blend import BlendPair, BlendPlan, BlendScheme, ImagePrompt
from .config import Config
from .expression import ConceptToken, Expression, parse_expression, select_concepts
from .knowledge import KnowledgeClient, RelatedTerm
from .mapping import Mapper, ObjectCandidate, Theme
from .scoring import (
    AnalysisDiagram,
    EmbeddingVector,
    PairScore,
    Scorer,
    SentimentScore,
    cosine_similarity,
    minmax_normalize,
    pair_sentiment,
    quantile_normalize,
)
from .studio import CanvasItem, Session, load_session, save_session

__all__ = [
    "BlendPair",
    "BlendPlan",
    "BlendScheme",
    "ImagePrompt",
    "Config",
    "ConceptToken",
    "Expression",
    "parse_expression",
    "select_concepts",
    "KnowledgeClient",
    "RelatedTerm",
    "Mapper",
    "ObjectCandidate",
    "Theme",
    "AnalysisDiagram",
    "EmbeddingVector",
    "PairScore",
    "Scorer",
    "SentimentScore",
    "cosine_similarity",
    "minmax_normalize",
    "pair_sentiment",
    "quantile_normalize",
    "CanvasItem",
    "Session",
    "load_session",
    "save_session",
]

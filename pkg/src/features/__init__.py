"""
App feature extraction from descriptions and feature lookup in reviews
"""

from src.features.extractor import (
    DEFAULT_PATTERNS,
    AppFeature,
    FeatureExtractor,
    extract_catalogue,
    extract_features,
    load_allowlist,
    load_patterns,
)
from src.features.matching import DEFAULT_WINDOW, match_features_in_review
from src.features.tagger import TAGS, PosTaggedToken, load_pos_lexicon, tag_pos

__all__ = [
    "DEFAULT_PATTERNS",
    "DEFAULT_WINDOW",
    "TAGS",
    "AppFeature",
    "FeatureExtractor",
    "PosTaggedToken",
    "extract_catalogue",
    "extract_features",
    "load_allowlist",
    "load_patterns",
    "load_pos_lexicon",
    "match_features_in_review",
    "tag_pos",
]

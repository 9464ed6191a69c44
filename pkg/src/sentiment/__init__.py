"""
Lexicon and rule based sentiment scoring
"""

from src.sentiment.analyzer import Polarity, SentimentAnalyzer, SentimentResult, classify, normalize, score
from src.sentiment.lexicon import SentimentLexicon, load_lexicon

__all__ = [
    "Polarity",
    "SentimentAnalyzer",
    "SentimentLexicon",
    "SentimentResult",
    "classify",
    "load_lexicon",
    "normalize",
    "score",
]

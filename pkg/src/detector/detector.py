"""
Values-violation decision rule for a single review

A review violates value item V when P(R, V) >= p_threshold and its
sentiment compound score is below the positive threshold (negative or
neutral).
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

from loguru import logger

from src.corpus.models import Review
from src.detector.models import Outcome, ViolatedItem, ViolationRecord
from src.features.extractor import AppFeature
from src.features.matching import DEFAULT_WINDOW, match_features_in_review
from src.sentiment.analyzer import SentimentAnalyzer
from src.textprep.preprocess import TextPreprocessor
from src.values.dictionary import ValuesDictionary
from src.values.matcher import match_values

DEFAULT_P_THRESHOLD = 0.05


@dataclass(frozen=True)
class Detection:
    """Outcome of running the rule on one review"""

    review_id: str
    app_id: str
    outcome: Outcome
    record: Optional[ViolationRecord] = None


class ViolationDetector:
    """
    Preprocess, score and match one review at a time

    Holds only immutable assets, so one instance can be shared by worker
    processes.
    """

    def __init__(
        self,
        dictionary: ValuesDictionary,
        preprocessor: TextPreprocessor,
        analyzer: SentimentAnalyzer,
        p_threshold: float = DEFAULT_P_THRESHOLD,
        window: int = DEFAULT_WINDOW,
    ):
        if not 0 < p_threshold <= 1:
            raise ValueError(f"p_threshold must be in (0, 1], got {p_threshold}")
        self.dictionary = dictionary
        self.preprocessor = preprocessor
        self.analyzer = analyzer
        self.p_threshold = p_threshold
        self.window = window

    def evaluate(self, review: Review, features: Sequence[AppFeature] = ()) -> Detection:
        """
        Apply the decision rule and report the outcome

        Args:
            review: Review that passed the informativeness filter
            features: Features extracted for the review's app

        Returns:
            Detection carrying the ViolationRecord when one is emitted
        """
        prepared = self.preprocessor(review.text, review_id=review.review_id)
        if not prepared.content_stems:
            logger.debug(f"Review {review.review_id}: no content stems left, degenerate")
            return Detection(review.review_id, review.app_id, Outcome.DEGENERATE)

        sentiment = self.analyzer.score(prepared.corrected_text)
        matches = match_values(prepared.content_stems, self.dictionary)
        matched_features = match_features_in_review(features, prepared.content_stems, self.window)

        kept: List[ViolatedItem] = [
            ViolatedItem(item=match.item.name, category=match.item.category.name, probability=match.probability)
            for match in matches
            if match.probability >= self.p_threshold
        ]
        if not kept or sentiment.compound >= self.analyzer.positive_threshold:
            return Detection(review.review_id, review.app_id, Outcome.NO_VIOLATION)

        record = ViolationRecord(
            review_id=review.review_id,
            app_id=review.app_id,
            items=tuple(kept),
            compound=sentiment.compound,
            polarity=sentiment.polarity,
            features=tuple(feature.phrase for feature in matched_features),
            likes=review.likes,
        )
        logger.debug(f"Review {review.review_id}: violation of {', '.join(record.item_names)}")
        return Detection(review.review_id, review.app_id, Outcome.VIOLATION, record)

    def detect(self, review: Review, features: Sequence[AppFeature] = ()) -> Optional[ViolationRecord]:
        """ViolationRecord for the review, or None"""
        return self.evaluate(review, features).record

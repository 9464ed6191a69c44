"""
Locating extracted app features inside review stems
"""

from typing import List, Sequence

from src.features.extractor import AppFeature

DEFAULT_WINDOW = 5


def _in_window(feature_stems: Sequence[str], review_stems: Sequence[str], window: int) -> bool:
    wanted = set(feature_stems)
    if len(wanted) > window:
        return False
    if len(review_stems) <= window:
        return wanted.issubset(review_stems)
    for start in range(len(review_stems)):
        if review_stems[start] in wanted and wanted.issubset(review_stems[start : start + window]):
            return True
    return False


def match_features_in_review(
    features: Sequence[AppFeature], review_stems: Sequence[str], window: int = DEFAULT_WINDOW
) -> List[AppFeature]:
    """
    Features whose stems all occur within `window` consecutive review stems

    Args:
        features: Features of the review's app
        review_stems: Content stems of the review
        window: Number of consecutive positions a match may span

    Returns:
        Matching features in input order
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    return [feature for feature in features if _in_window(feature.stems, review_stems, window)]

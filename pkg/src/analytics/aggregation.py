"""
Corpus-level aggregates over violation records

Counts by value category, per-item frequencies, likes per category and the
feature / value-violation association table.
"""

from collections import Counter, defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict

from src.detector.models import ViolationRecord
from src.exceptions import DataError
from src.values.dictionary import CATEGORY_NAMES


class ItemFrequency(BaseModel):
    model_config = ConfigDict(frozen=True)

    item: str
    category: str
    frequency: int


class CategoryStats(BaseModel):
    """
    Violations per value category

    `category_counts` is review-level (a review counts once per distinct
    violated category); `item_category_counts` is item-level (a review
    counts once per violated item). `percentages` are over the review-level
    total.
    """

    model_config = ConfigDict(frozen=True)

    category_counts: Dict[str, int]
    item_category_counts: Dict[str, int]
    item_frequencies: Tuple[ItemFrequency, ...]
    total: int
    item_total: int
    percentages: Dict[str, float]
    empty_total: bool
    per_app: Dict[str, Dict[str, int]]
    per_app_totals: Dict[str, int]
    averages: Dict[str, float]
    average_total: float
    violating_reviews: int
    corpus_size: int

    @property
    def violation_rate(self) -> float:
        """Share of the corpus with at least one violation"""
        return self.violating_reviews / self.corpus_size if self.corpus_size else 0.0

    def ranked_items(self) -> List[ItemFrequency]:
        """Items ordered from most to least violated"""
        return sorted(self.item_frequencies, key=lambda row: (-row.frequency, row.item))


class LikesStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    likes: Dict[str, int]

    def ranking(self) -> List[Tuple[str, int]]:
        return sorted(self.likes.items(), key=lambda pair: (-pair[1], pair[0]))


class FeatureValueRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    feature: str
    app_id: str
    items: Tuple[str, ...]
    support: int


class FeatureValueTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: Tuple[FeatureValueRow, ...] = ()

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):  # type: ignore[override]
        return iter(self.rows)


def _category_order(seen: Iterable[str]) -> List[str]:
    extra = sorted(set(seen) - set(CATEGORY_NAMES))
    return list(CATEGORY_NAMES) + extra


def aggregate_by_category(
    records: Sequence[ViolationRecord],
    corpus_size: int,
    apps: Optional[Sequence[str]] = None,
) -> CategoryStats:
    """
    Count violations per category and item

    Args:
        records: Violation records from one pipeline run
        corpus_size: Number of reviews the run processed
        apps: App ids to report, in display order; apps without records
            count as zero. Defaults to the apps seen in records, sorted.

    Returns:
        CategoryStats
    """
    distinct_reviews = {record.review_id for record in records}
    if corpus_size < len(distinct_reviews):
        raise DataError(
            f"corpus_size {corpus_size} is smaller than the {len(distinct_reviews)} reviews with violations"
        )

    review_level: Counter = Counter()
    item_level: Counter = Counter()
    item_counts: Counter = Counter()
    item_category: Dict[str, str] = {}
    per_app: Dict[str, Counter] = defaultdict(Counter)

    for record in records:
        for category in record.categories:
            review_level[category] += 1
            per_app[record.app_id][category] += 1
        for violated in record.items:
            item_level[violated.category] += 1
            item_counts[violated.item] += 1
            item_category[violated.item] = violated.category

    categories = _category_order(list(review_level) + list(item_level))
    category_counts = {category: review_level.get(category, 0) for category in categories}
    item_category_counts = {category: item_level.get(category, 0) for category in categories}
    total = sum(category_counts.values())
    empty_total = total == 0
    percentages = {
        category: (0.0 if empty_total else 100.0 * count / total) for category, count in category_counts.items()
    }

    app_ids = list(apps) if apps is not None else sorted(per_app)
    matrix = {app: {category: per_app[app].get(category, 0) for category in categories} for app in app_ids}
    app_totals = {app: sum(row.values()) for app, row in matrix.items()}
    averages = {
        category: (sum(matrix[app][category] for app in app_ids) / len(app_ids) if app_ids else 0.0)
        for category in categories
    }
    average_total = sum(app_totals.values()) / len(app_ids) if app_ids else 0.0

    frequencies = tuple(
        ItemFrequency(item=item, category=item_category[item], frequency=item_counts[item])
        for item in sorted(item_counts, key=lambda name: (categories.index(item_category[name]), name))
    )

    stats = CategoryStats(
        category_counts=category_counts,
        item_category_counts=item_category_counts,
        item_frequencies=frequencies,
        total=total,
        item_total=sum(item_category_counts.values()),
        percentages=percentages,
        empty_total=empty_total,
        per_app=matrix,
        per_app_totals=app_totals,
        averages=averages,
        average_total=average_total,
        violating_reviews=len(distinct_reviews),
        corpus_size=corpus_size,
    )
    logger.info(
        f"Aggregated {stats.violating_reviews} violating reviews of {corpus_size} "
        f"({100 * stats.violation_rate:.1f}%): {total} category violations, {stats.item_total} item violations"
    )
    return stats


def aggregate_likes(records: Iterable[ViolationRecord]) -> LikesStats:
    """
    Sum likes of violating reviews per category

    A review's likes count toward every category it violates.
    """
    totals: Counter = Counter()
    for record in records:
        for category in record.categories:
            totals[category] += record.likes
    categories = _category_order(totals)
    return LikesStats(likes={category: totals.get(category, 0) for category in categories})


def associate_features(records: Iterable[ViolationRecord]) -> FeatureValueTable:
    """
    Group violated items by (app, feature)

    Returns:
        FeatureValueTable with rows sorted by support (number of backing
        records), most supported first
    """
    items: Dict[Tuple[str, str], Set[str]] = defaultdict(set)
    support: Counter = Counter()
    for record in records:
        for feature in dict.fromkeys(record.features):
            key = (record.app_id, feature)
            items[key].update(record.item_names)
            support[key] += 1

    rows = [
        FeatureValueRow(feature=feature, app_id=app_id, items=tuple(sorted(items[(app_id, feature)])), support=count)
        for (app_id, feature), count in support.items()
    ]
    rows.sort(key=lambda row: (-row.support, row.app_id, row.feature))
    return FeatureValueTable(rows=tuple(rows))

"""
Tests for corpus aggregates and truthset evaluation
"""

import json

import pytest

from src.analytics import (
    aggregate_by_category,
    aggregate_likes,
    associate_features,
    evaluate,
    evaluate_detailed,
    f_measure,
    load_truthset,
    metrics_from_counts,
)
from src.analytics.evaluation import TruthLabel
from src.detector import ViolatedItem, ViolationRecord
from src.exceptions import DataError
from src.sentiment import Polarity

# Alphabetical category order, as in the per-app matrix
CATEGORY_COLUMNS = [
    "Achievement",
    "Benevolence",
    "Conformity",
    "Hedonism",
    "Power",
    "Security",
    "Self-direction",
    "Stimulation",
    "Tradition",
    "Universalism",
]
PER_APP_TOTALS = [614, 135, 337, 652, 614, 470, 424, 513, 779, 237, 411, 665]
AVERAGE_ROW = [28.1, 172.3, 2.8, 95.2, 10, 22.1, 125, 6.3, 4.5, 21.3]
AVERAGE_TOTAL = 487.6


def _record(review_id, items, app_id="cba", likes=0, features=()):
    return ViolationRecord(
        review_id=review_id,
        app_id=app_id,
        items=tuple(ViolatedItem(item=item, category=category, probability=0.1) for item, category in items),
        compound=-0.4,
        polarity=Polarity.NEGATIVE,
        features=tuple(features),
        likes=likes,
    )


def test_per_app_totals(per_app_stats):
    assert list(per_app_stats.per_app_totals.values()) == PER_APP_TOTALS
    assert per_app_stats.per_app["monopoly"]["Power"] == 69


def test_averages_match_table(per_app_stats):
    for category, expected in zip(CATEGORY_COLUMNS, AVERAGE_ROW):
        assert round(per_app_stats.averages[category], 1) == pytest.approx(expected)
    assert round(per_app_stats.average_total, 1) == pytest.approx(AVERAGE_TOTAL)


def test_category_shares(per_app_stats):
    assert per_app_stats.total == 5851
    assert per_app_stats.category_counts["Benevolence"] == 2068
    assert per_app_stats.category_counts["Self-direction"] == 1500
    assert per_app_stats.percentages["Benevolence"] == pytest.approx(35.34, abs=0.005)
    assert per_app_stats.percentages["Self-direction"] == pytest.approx(25.64, abs=0.005)
    assert per_app_stats.percentages["Tradition"] == pytest.approx(0.92, abs=0.005)
    assert per_app_stats.percentages["Conformity"] == pytest.approx(0.56, abs=0.005)
    assert sum(per_app_stats.percentages.values()) == pytest.approx(100.0)


def test_violation_rate(per_app_stats):
    assert per_app_stats.violating_reviews == 5851
    assert round(100 * per_app_stats.violation_rate, 1) == 26.5


def test_review_and_item_level_counts():
    records = [
        _record("r1", [("Helpful", "Benevolence"), ("Honest", "Benevolence"), ("Freedom", "Self-direction")]),
        _record("r2", [("Helpful", "Benevolence")]),
    ]
    stats = aggregate_by_category(records, corpus_size=10)
    assert stats.category_counts["Benevolence"] == 2
    assert stats.item_category_counts["Benevolence"] == 3
    assert stats.total == 3
    assert stats.item_total == 4
    assert [(row.item, row.frequency) for row in stats.ranked_items()] == [
        ("Helpful", 2),
        ("Freedom", 1),
        ("Honest", 1),
    ]


def test_empty_records():
    stats = aggregate_by_category([], corpus_size=5)
    assert stats.empty_total
    assert set(stats.percentages.values()) == {0.0}
    assert stats.violation_rate == 0.0


def test_corpus_size_must_cover_records():
    with pytest.raises(DataError):
        aggregate_by_category([_record("r1", [("Helpful", "Benevolence")])], corpus_size=0)


def test_likes_per_category():
    records = [
        _record("r1", [("Freedom", "Self-direction"), ("Helpful", "Benevolence")], likes=10),
        _record("r2", [("Helpful", "Benevolence"), ("Honest", "Benevolence")], likes=5),
        _record("r3", [("Pleasure", "Hedonism")], likes=15),
    ]
    likes = aggregate_likes(records)
    assert likes.likes["Benevolence"] == 15
    assert likes.likes["Self-direction"] == 10
    assert likes.ranking()[:3] == [("Benevolence", 15), ("Hedonism", 15), ("Self-direction", 10)]
    assert likes.likes["Tradition"] == 0


def test_feature_rows_union_items():
    records = [
        _record("r1", [("Curiosity", "Self-direction")], app_id="anydo", features=["set reminders"]),
        _record("r2", [("Helpful", "Benevolence")], app_id="anydo", features=["set reminders", "sync notes"]),
        _record("r3", [("Pleasure", "Hedonism")], app_id="picsart", features=["set reminders"]),
    ]
    table = associate_features(records)
    rows = [(row.app_id, row.feature, row.items, row.support) for row in table]
    assert rows == [
        ("anydo", "set reminders", ("Curiosity", "Helpful"), 2),
        ("anydo", "sync notes", ("Helpful",), 1),
        ("picsart", "set reminders", ("Pleasure",), 1),
    ]


def test_published_precision_recall_triple():
    metrics = metrics_from_counts(tp=5727, fp=2573, tn=13646, fn=1173)
    assert round(metrics.precision, 2) == 0.69
    assert round(metrics.recall, 2) == 0.83
    assert round(metrics.f_measure, 2) == 0.75
    assert metrics.total == 23119


def test_undefined_metrics_flagged():
    metrics = metrics_from_counts(tp=0, fp=0, tn=4, fn=0)
    assert metrics.precision == 0.0
    assert not metrics.precision_defined
    assert not metrics.recall_defined
    assert not metrics.f_defined
    assert f_measure(0.0, 0.0) == 0.0


def test_evaluate_counts_unlabelled_as_negative():
    records = [_record(rid, [("Helpful", "Benevolence")]) for rid in ("a", "c", "d")]
    truth = [
        TruthLabel(review_id="a", violated_items=("Helpful",), violated_categories=("Benevolence",)),
        TruthLabel(review_id="b", violated_items=("Honest",), violated_categories=("Benevolence",)),
        TruthLabel(review_id="c"),
    ]
    metrics = evaluate(records, truth, ["a", "b", "c", "d", "e"])
    assert (metrics.tp, metrics.fp, metrics.fn, metrics.tn) == (1, 2, 1, 1)
    assert metrics.total == 5
    assert metrics.precision == pytest.approx(1 / 3)
    assert metrics.recall == pytest.approx(0.5)


def test_per_item_metrics():
    records = [_record("a", [("Helpful", "Benevolence"), ("Honest", "Benevolence")])]
    truth = [TruthLabel(review_id="a", violated_items=("Helpful",))]
    report = evaluate_detailed(records, truth, ["a", "b"])
    per_item = {row.item: row.metrics for row in report.per_item}
    assert (per_item["Helpful"].tp, per_item["Helpful"].tn) == (1, 1)
    assert (per_item["Honest"].fp, per_item["Honest"].tn) == (1, 1)


def test_truth_id_outside_corpus():
    with pytest.raises(DataError, match="not found in corpus"):
        evaluate([], [TruthLabel(review_id="zz")], ["a"])


def test_records_outside_corpus_ignored():
    metrics = evaluate([_record("x", [("Helpful", "Benevolence")])], [], ["a"])
    assert (metrics.tp, metrics.fp, metrics.tn, metrics.fn) == (0, 0, 1, 0)


def test_fixture_truthset(fixtures_dir):
    labels = load_truthset(fixtures_dir / "truthset.jsonl")
    assert len(labels) == 50
    assert all(label.is_violation for label in labels)
    assert labels[39].violated_items == ("Honest",)


def test_truthset_duplicates_rejected(tmp_path):
    path = tmp_path / "truth.jsonl"
    row = json.dumps({"review_id": "a", "violated_items": [], "violated_categories": []})
    path.write_text(row + "\n" + row + "\n", encoding="utf-8")
    with pytest.raises(DataError) as excinfo:
        load_truthset(path)
    assert excinfo.value.line == 2

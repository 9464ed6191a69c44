"""
Tests for review ingestion and the informativeness filter
"""

import json

import pytest

from src.corpus import (
    Review,
    ReviewCollection,
    filter_informative,
    load_app_metadata,
    load_reviews,
    partition_informative,
    write_reviews,
)
from src.exceptions import DataError

# Dataset overview: Cellopark contributed 607 reviews, every other app 2000
APP_REVIEW_COUNTS = {
    "pinterest": 2000,
    "trainingpeaks": 2000,
    "minecraft": 2000,
    "monopoly": 2000,
    "picsart": 2000,
    "anydo": 2000,
    "telegram": 2000,
    "tripadvisor": 2000,
    "paybyphone": 2000,
    "cellopark": 607,
    "tiktok": 2000,
    "cba": 2000,
}


def _write_jsonl(path, rows):
    path.write_text("".join(json.dumps(row) + "\n" for row in rows), encoding="utf-8")
    return path


def _review(review_id, text="This app keeps crashing", app_id="anydo", **extra):
    return Review(review_id=review_id, app_id=app_id, text=text, rating=extra.pop("rating", 2), **extra)


def test_load_fixture_corpus(fixtures_dir):
    corpus = load_reviews(fixtures_dir / "reviews.jsonl")
    assert len(corpus) == 50
    assert corpus.ids()[0] == "r01"
    assert corpus.ids()[-1] == "r50"
    assert corpus.source_counts["anydo"] == 13


def test_fixture_apps(fixtures_dir):
    apps = load_app_metadata(fixtures_dir / "apps.jsonl")
    assert len(apps) == 12
    assert {app.app_id for app in apps} == set(APP_REVIEW_COUNTS)
    assert apps[0].name == "Pinterest"


def test_missing_text_points_at_line(tmp_path):
    path = _write_jsonl(
        tmp_path / "reviews.jsonl",
        [
            {"review_id": "a", "app_id": "x", "text": "fine app really", "rating": 4},
            {"review_id": "b", "app_id": "x", "rating": 4},
        ],
    )
    with pytest.raises(DataError) as excinfo:
        load_reviews(path)
    assert excinfo.value.line == 2
    assert "text" in str(excinfo.value)


def test_duplicate_review_id_rejected(tmp_path):
    row = {"review_id": "dup", "app_id": "x", "text": "crashes every single time", "rating": 1}
    path = _write_jsonl(tmp_path / "reviews.jsonl", [row, row])
    with pytest.raises(DataError, match="duplicate review_id"):
        load_reviews(path)


def test_rating_out_of_range(tmp_path):
    path = _write_jsonl(tmp_path / "r.jsonl", [{"review_id": "a", "app_id": "x", "text": "meh app here", "rating": 6}])
    with pytest.raises(DataError) as excinfo:
        load_reviews(path)
    assert excinfo.value.line == 1


def test_invalid_json_line(tmp_path):
    path = tmp_path / "r.jsonl"
    path.write_text('{"review_id": "a"\n', encoding="utf-8")
    with pytest.raises(DataError, match="invalid JSON"):
        load_reviews(path)


def test_unknown_format(tmp_path):
    path = tmp_path / "reviews.xml"
    path.write_text("<reviews/>", encoding="utf-8")
    with pytest.raises(DataError, match="unsupported review format"):
        load_reviews(path)


def test_csv_and_jsonl_agree(tmp_path):
    corpus = ReviewCollection(
        reviews=(
            _review("1", "Great app, love it", likes=3, date="2021-02-01"),
            _review("2", 'Says "free" but charges, useless', app_id="cba", rating=1),
            _review("3", "Line one\nline two, still useful", likes=0),
        )
    )
    jsonl = load_reviews(write_reviews(corpus, tmp_path / "out.jsonl"))
    csv = load_reviews(write_reviews(corpus, tmp_path / "out.csv"))
    assert jsonl == corpus
    assert csv == corpus


def test_csv_unexpected_column(tmp_path):
    path = tmp_path / "reviews.csv"
    path.write_text("review_id,app_id,text,rating,stars\n1,x,okay app here,3,3\n", encoding="utf-8")
    with pytest.raises(DataError, match="unexpected CSV columns"):
        load_reviews(path)


def test_csv_blank_likes_defaults_to_zero(tmp_path):
    path = tmp_path / "reviews.csv"
    path.write_text("review_id,app_id,text,rating,likes\n1,x,okay app here,3,\n", encoding="utf-8")
    assert load_reviews(path).reviews[0].likes == 0


def test_bad_date_rejected():
    with pytest.raises(ValueError):
        _review("1", date="yesterday")


def test_informative_threshold():
    corpus = ReviewCollection(
        reviews=(
            _review("short", "Good app!"),
            _review("exact", "Good app overall"),
            _review("empty", ""),
            _review("punct", "!!! ??? ..."),
        )
    )
    kept = filter_informative(corpus)
    assert kept.ids() == ("exact",)


def test_informative_filter_is_idempotent(fixtures_dir):
    mixed = ReviewCollection(
        reviews=load_reviews(fixtures_dir / "reviews.jsonl").reviews
        + (_review("short", "Good app!"), _review("blank", "   "), _review("two", "Crashes constantly"))
    )
    once = filter_informative(mixed)
    assert filter_informative(once) == once
    assert filter_informative(once, min_tokens=3).ids() == once.ids()
    assert len(once) == 50


def test_partition_keeps_every_review_once():
    corpus = ReviewCollection(
        reviews=(_review("a", "Good app overall"), _review("b", "Bad"), _review("c", "Works fine now"))
    )
    kept, discarded = partition_informative(corpus)
    assert kept.ids() == ("a", "c")
    assert discarded.ids() == ("b",)


def test_informative_min_tokens_validated():
    with pytest.raises(ValueError):
        filter_informative(ReviewCollection(), min_tokens=0)


def test_cellopark_dataset_size():
    reviews = tuple(
        _review(f"cellopark-{i}", f"Parking payment failed again {i}", app_id="cellopark") for i in range(607)
    )
    kept = filter_informative(ReviewCollection(reviews=reviews))
    assert len(kept) == 607
    assert kept.source_counts == {"cellopark": 607}


def test_study_scale_filter_counts():
    """22,607 collected reviews minus 488 short ones leaves 22,119"""
    reviews = []
    short_left = 488
    for app_id, count in APP_REVIEW_COUNTS.items():
        for i in range(count):
            if short_left and i % 40 == 0:
                text = "Nice app"
                short_left -= 1
            else:
                text = "The parking payment keeps failing"
            reviews.append(_review(f"{app_id}-{i}", text, app_id=app_id))
    corpus = ReviewCollection(reviews=tuple(reviews))
    assert len(corpus) == 22607
    assert short_left == 0

    kept = filter_informative(corpus)
    assert len(kept) == 22119
    # order is preserved
    assert list(kept.ids()) == [r.review_id for r in reviews if r.text != "Nice app"]

"""
Shared fixtures: bundled assets and the 50-review / 12-app fixture corpus
"""

from pathlib import Path

import pytest

from src.analytics import aggregate_by_category
from src.config import asset_path
from src.corpus import filter_informative, load_app_metadata, load_reviews
from src.detector import ViolatedItem, ViolationRecord
from src.detector.pipeline import build_detector
from src.sentiment import Polarity, SentimentAnalyzer, load_lexicon
from src.textprep import load_frequency_list, load_stoplist
from src.values import load_dictionary

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def dictionary():
    return load_dictionary(asset_path("dictionary"))


@pytest.fixture(scope="session")
def freq():
    return load_frequency_list(asset_path("frequencies"))


@pytest.fixture(scope="session")
def stoplist():
    return load_stoplist(asset_path("stoplist"))


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(asset_path("lexicon"), asset_path("boosters"), asset_path("negations"))


@pytest.fixture(scope="session")
def analyzer(lexicon):
    return SentimentAnalyzer(lexicon)


@pytest.fixture(scope="session")
def apps():
    return load_app_metadata(FIXTURES / "apps.jsonl")


@pytest.fixture(scope="session")
def corpus():
    return filter_informative(load_reviews(FIXTURES / "reviews.jsonl"))


@pytest.fixture(scope="session")
def detector(dictionary, freq, stoplist, lexicon, apps):
    return build_detector(dictionary, freq, stoplist, lexicon, apps)


# Review-level violations per category for the 12 studied apps, columns in
# alphabetical category order
PER_APP_CATEGORIES = [
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
PER_APP_VIOLATIONS = {
    "pinterest": [21, 137, 1, 184, 11, 14, 200, 8, 6, 32],
    "trainingpeaks": [4, 58, 0, 9, 1, 12, 32, 2, 3, 14],
    "minecraft": [21, 89, 3, 81, 3, 28, 90, 5, 6, 11],
    "monopoly": [74, 158, 2, 114, 69, 55, 141, 13, 4, 22],
    "picsart": [36, 236, 4, 174, 6, 17, 110, 4, 4, 23],
    "anydo": [26, 182, 1, 84, 2, 16, 126, 9, 1, 23],
    "telegram": [19, 174, 4, 68, 4, 12, 121, 4, 2, 16],
    "tripadvisor": [14, 152, 3, 88, 4, 24, 193, 8, 6, 21],
    "paybyphone": [37, 389, 4, 88, 3, 26, 191, 8, 6, 27],
    "cellopark": [22, 99, 4, 25, 3, 7, 54, 2, 3, 18],
    "tiktok": [16, 123, 6, 115, 7, 19, 89, 7, 6, 23],
    "cba": [47, 271, 1, 112, 7, 35, 153, 6, 7, 26],
}
STUDY_CORPUS_SIZE = 22119


@pytest.fixture(scope="session")
def per_app_records(dictionary):
    """One single-item record per violation in the per-app table"""
    first_item = {category: dictionary.items_in(category)[0].name for category in PER_APP_CATEGORIES}
    records = []
    for app_id, counts in PER_APP_VIOLATIONS.items():
        for category, count in zip(PER_APP_CATEGORIES, counts):
            for i in range(count):
                records.append(
                    ViolationRecord(
                        review_id=f"{app_id}-{category}-{i}",
                        app_id=app_id,
                        items=(ViolatedItem(item=first_item[category], category=category, probability=0.1),),
                        compound=-0.4,
                        polarity=Polarity.NEGATIVE,
                    )
                )
    return records


@pytest.fixture(scope="session")
def per_app_stats(per_app_records):
    return aggregate_by_category(per_app_records, STUDY_CORPUS_SIZE, apps=list(PER_APP_VIOLATIONS))

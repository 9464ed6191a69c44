"""
Tests for the Porter2 stemmer
"""

import pytest

from src.textprep import stem

# Pairs from the published Snowball English sample vocabulary
REFERENCE_PAIRS = [
    ("running", "run"),
    ("cats", "cat"),
    ("a", "a"),
    ("pretty", "pretti"),
    ("generously", "generous"),
    ("consign", "consign"),
    ("consigned", "consign"),
    ("consigning", "consign"),
    ("consignment", "consign"),
    ("consist", "consist"),
    ("consisted", "consist"),
    ("consistency", "consist"),
    ("consistent", "consist"),
    ("consistently", "consist"),
    ("consisting", "consist"),
    ("consists", "consist"),
    ("consolation", "consol"),
    ("consolations", "consol"),
    ("consolatory", "consolatori"),
    ("console", "consol"),
    ("consoled", "consol"),
    ("consoles", "consol"),
    ("consolidate", "consolid"),
    ("consolidated", "consolid"),
    ("consolidating", "consolid"),
    ("consoling", "consol"),
    ("consolingly", "consol"),
    ("consols", "consol"),
    ("consonant", "conson"),
    ("consort", "consort"),
    ("consorted", "consort"),
    ("consorting", "consort"),
    ("conspicuous", "conspicu"),
    ("conspicuously", "conspicu"),
    ("conspiracy", "conspiraci"),
    ("conspirator", "conspir"),
    ("conspirators", "conspir"),
    ("conspire", "conspir"),
    ("conspired", "conspir"),
    ("conspiring", "conspir"),
    ("constable", "constabl"),
    ("constables", "constabl"),
    ("constance", "constanc"),
    ("constancy", "constanc"),
    ("constant", "constant"),
    ("knack", "knack"),
    ("knackeries", "knackeri"),
    ("knacks", "knack"),
    ("knave", "knave"),
    ("knaves", "knave"),
    ("knavish", "knavish"),
    ("kneaded", "knead"),
    ("kneading", "knead"),
    ("knee", "knee"),
    ("kneel", "kneel"),
    ("kneeled", "kneel"),
    ("kneeling", "kneel"),
    ("kneels", "kneel"),
    ("knees", "knee"),
    ("knell", "knell"),
    ("knelt", "knelt"),
    ("knew", "knew"),
    ("knife", "knife"),
    ("knight", "knight"),
    ("knightly", "knight"),
    ("knights", "knight"),
    ("knit", "knit"),
    ("knits", "knit"),
    ("knitted", "knit"),
    ("knitting", "knit"),
    ("knives", "knive"),
    ("knob", "knob"),
    ("knock", "knock"),
    ("knocked", "knock"),
    ("knocker", "knocker"),
    ("knockers", "knocker"),
    ("knocking", "knock"),
    ("knot", "knot"),
    ("knots", "knot"),
]


@pytest.mark.parametrize("word,expected", REFERENCE_PAIRS)
def test_reference_vocabulary(word, expected):
    assert stem(word) == expected


@pytest.mark.parametrize(
    "word,expected",
    [("skis", "ski"), ("skies", "sky"), ("dying", "die"), ("news", "news"), ("bias", "bias"), ("early", "earli")],
)
def test_exceptional_forms(word, expected):
    assert stem(word) == expected


@pytest.mark.parametrize("word", ["inning", "outing", "herring", "proceed", "succeed"])
def test_words_frozen_after_step_1a(word):
    assert stem(word) == word


def test_value_keywords_are_fixed_points():
    for word in ("useless", "dishonest", "fraud", "honest", "privacy", "strife", "unfair"):
        stemmed = stem(word)
        assert stem(stemmed) == stemmed


def test_dictionary_keywords_are_fixed_points(dictionary):
    for item in dictionary:
        for keyword in item.keywords:
            assert stem(keyword) == keyword, f"{item.name}: {keyword}"


def _reference_pairs(fixtures_dir):
    pairs = []
    for line in (fixtures_dir / "snowball_stems.tsv").read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            word, expected = line.split("\t")
            pairs.append((word, expected))
    return pairs


def test_matches_reference_stems(fixtures_dir):
    pairs = _reference_pairs(fixtures_dir)
    assert len(pairs) >= 1000
    mismatches = [(word, stem(word), expected) for word, expected in pairs if stem(word) != expected]
    assert mismatches == []

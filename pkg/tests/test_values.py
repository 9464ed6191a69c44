"""
Tests for the values dictionary and keyword matching
"""

import json
import random

import pytest

from src.config import asset_path
from src.exceptions import DictionaryValidationError
from src.textprep import stem
from src.values import (
    ANTONYM,
    CATEGORY_NAMES,
    EXCLUDED_ITEMS,
    SYNONYM,
    ValueCategory,
    ValueItem,
    ValuesDictionary,
    build_dictionary,
    load_dictionary,
    match_values,
)

EXPECTED_COUNTS = [7, 3, 3, 5, 4, 6, 3, 5, 7, 7]


@pytest.fixture
def raw_dictionary():
    return json.loads(asset_path("dictionary").read_text(encoding="utf-8"))


def _filler(n):
    return [f"filler{i}" for i in range(n)]


def test_bundled_dictionary_shape(dictionary):
    assert len(dictionary) == 50
    assert list(dictionary.category_counts()) == list(CATEGORY_NAMES)
    assert list(dictionary.category_counts().values()) == EXPECTED_COUNTS
    assert CATEGORY_NAMES[0] == "Self-direction"
    assert CATEGORY_NAMES[-1] == "Universalism"


def test_bundled_dictionary_has_no_excluded_items(dictionary):
    names = {item.name.lower() for item in dictionary}
    assert not names & EXCLUDED_ITEMS


def test_keywords_are_stemmed(dictionary):
    helpful = dictionary.item("Helpful")
    assert helpful.category.name == "Benevolence"
    assert helpful.tag(stem("useless")) == ANTONYM
    assert helpful.tag("help") == SYNONYM
    assert "useless" in helpful.terms

    honest = dictionary.item("Honest")
    assert {stem("dishonest"), stem("fraud")} <= honest.antonyms
    for item in dictionary:
        assert item.keywords
        assert all(stem(keyword) == keyword for keyword in item.keywords)


def test_synonym_wins_over_antonym(raw_dictionary):
    raw_dictionary["Benevolence"]["Helpful"]["antonyms"].append("helping")
    helpful = build_dictionary(raw_dictionary).item("Helpful")
    assert helpful.tag("help") == SYNONYM
    assert "help" not in helpful.antonyms


def test_load_is_order_insensitive(raw_dictionary, dictionary):
    reversed_data = {
        category: dict(reversed(list(items.items()))) for category, items in reversed(list(raw_dictionary.items()))
    }
    assert build_dictionary(reversed_data) == dictionary
    assert build_dictionary(raw_dictionary) == dictionary


@pytest.mark.parametrize("excluded", ["Social power", "Reciprocation of favours", "Unity with nature"])
def test_excluded_item_rejected(raw_dictionary, excluded):
    category = "Power" if excluded == "Social power" else "Universalism"
    raw_dictionary[category][excluded] = {"synonyms": ["power"]}
    with pytest.raises(DictionaryValidationError) as excinfo:
        build_dictionary(raw_dictionary)
    assert any(excluded in problem for problem in excinfo.value.problems)


def test_missing_item_reported(raw_dictionary):
    del raw_dictionary["Benevolence"]["Loyal"]
    with pytest.raises(DictionaryValidationError) as excinfo:
        build_dictionary(raw_dictionary)
    problems = excinfo.value.problems
    assert problems[0] == "dictionary has 49 items, expected 50"
    assert any("'Benevolence' has 6 items, expected 7" in problem for problem in problems)


def test_unknown_category_and_multiword_keyword(raw_dictionary):
    raw_dictionary["Fun"] = {"Games": {"synonyms": ["play"]}}
    raw_dictionary["Benevolence"]["Helpful"]["antonyms"].append("not helpful")
    with pytest.raises(DictionaryValidationError) as excinfo:
        build_dictionary(raw_dictionary)
    text = str(excinfo.value)
    assert "unknown category 'Fun'" in text
    assert "'not helpful' must be a single word" in text


def test_invalid_json_file(tmp_path):
    path = tmp_path / "dict.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(DictionaryValidationError, match="invalid JSON"):
        load_dictionary(path)


def test_probability_at_threshold(dictionary):
    outcome = match_values(["useless"] + _filler(19), dictionary)
    assert outcome.tr == 20
    assert outcome.by_item()["Helpful"].probability == pytest.approx(0.05)


def test_probability_below_threshold(dictionary):
    outcome = match_values(["useless"] + _filler(20), dictionary)
    assert outcome.by_item()["Helpful"].probability == pytest.approx(1 / 21)


def test_two_honest_keywords(dictionary):
    stems = [stem("dishonest"), stem("fraud")] + _filler(8)
    match = match_values(stems, dictionary).by_item()["Honest"]
    assert match.tv == 2
    assert match.tr == 10
    assert match.probability == pytest.approx(0.2)
    assert {tag for _, tag in match.matched_stems} == {ANTONYM}


def test_matches_agree_with_brute_force(dictionary):
    stems = ["useless", "help", "fraud", "privaci", "filler", "useless"]
    outcome = match_values(stems, dictionary)
    for item in dictionary:
        tv = sum(1 for s in stems if s in item.keywords)
        if tv:
            assert outcome.by_item()[item.name].tv == tv
        else:
            assert item.name not in outcome.by_item()


def test_no_stems_is_degenerate(dictionary):
    outcome = match_values([], dictionary)
    assert outcome.degenerate
    assert len(outcome) == 0


def test_shared_keyword_counts_for_each_item():
    category = ValueCategory("Benevolence")
    first = ValueItem("Helpful", category, frozenset(["help"]))
    second = ValueItem("Responsible", category, frozenset(["help", "duti"]))
    small = ValuesDictionary(items=(first, second), categories=(category,))

    outcome = match_values(["help", "help", "app"], small)
    assert [match.item.name for match in outcome] == ["Helpful", "Responsible"]
    assert outcome[0].tv == 2
    assert outcome[0].probability == pytest.approx(2 / 3)
    assert small.keyword_index()["help"] == (first, second)


def test_random_reviews_agree_with_brute_force(dictionary):
    rng = random.Random(20240501)
    keywords = sorted({keyword for item in dictionary for keyword in item.keywords})
    pool = keywords + _filler(40)
    for _ in range(200):
        stems = [rng.choice(pool) for _ in range(rng.randint(1, 30))]
        outcome = match_values(stems, dictionary)
        assert outcome.tr == len(stems)
        for item in dictionary:
            tv = sum(1 for s in stems if s in item.keywords)
            match = outcome.by_item().get(item.name)
            if tv:
                assert match.tv == tv
                assert match.probability == pytest.approx(tv / len(stems))
            else:
                assert match is None

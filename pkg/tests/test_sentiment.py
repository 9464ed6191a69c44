"""
Tests for the rule-based sentiment scorer and polarity thresholds
"""

import pytest

from src.exceptions import DataError
from src.sentiment import Polarity, SentimentAnalyzer, SentimentLexicon, classify, load_lexicon, normalize, score

POSITIVE_WORDS = [
    "good",
    "great",
    "excellent",
    "amazing",
    "awesome",
    "nice",
    "helpful",
    "useful",
    "perfect",
    "wonderful",
]
NEGATIVE_WORDS = [
    "bad",
    "terrible",
    "awful",
    "horrible",
    "useless",
    "annoying",
    "poor",
    "stupid",
    "ugly",
    "disappointing",
]
FRAMES = [
    "The app is {w}.",
    "This update is {w}!",
    "The new version is really {w}",
    "It is not {w}.",
    "The developers made it {w} again",
    "Customer service was very {w}.",
    "The latest release looks {w} on my phone",
    "{W} app.",
    "The interface is {w} and the sync works",
    "Why is the map so {w}??",
]


def _sentences():
    for frame in FRAMES:
        for word in POSITIVE_WORDS + NEGATIVE_WORDS:
            yield frame.format(w=word, W=word.capitalize())


@pytest.mark.parametrize(
    "compound,expected",
    [
        (0.05, Polarity.POSITIVE),
        (0.049, Polarity.NEUTRAL),
        (-0.05, Polarity.NEGATIVE),
        (-0.049, Polarity.NEUTRAL),
        (0.0, Polarity.NEUTRAL),
        (1.0, Polarity.POSITIVE),
        (-1.0, Polarity.NEGATIVE),
    ],
)
def test_classify_boundaries(compound, expected):
    assert classify(compound) == expected


def test_classify_partitions_unit_interval():
    steps = 10_000
    counts = {polarity: 0 for polarity in Polarity}
    for k in range(steps + 1):
        x = -1 + 2 * k / steps
        polarity = classify(x)
        counts[polarity] += 1
        if x >= 0.05:
            assert polarity == Polarity.POSITIVE
        elif x <= -0.05:
            assert polarity == Polarity.NEGATIVE
        else:
            assert polarity == Polarity.NEUTRAL
    assert sum(counts.values()) == steps + 1
    assert all(counts.values())


def test_custom_thresholds():
    analyzer = SentimentAnalyzer(SentimentLexicon({}), positive_threshold=0.2, negative_threshold=-0.3)
    assert analyzer.classify(0.1) == Polarity.NEUTRAL
    assert analyzer.classify(-0.3) == Polarity.NEGATIVE
    with pytest.raises(ValueError):
        SentimentAnalyzer(SentimentLexicon({}), positive_threshold=-0.1, negative_threshold=0.1)


def test_normalize_is_monotonic_and_bounded():
    values = [normalize(s / 10) for s in range(-200, 201)]
    assert values == sorted(values)
    assert len(set(values)) == len(values)
    assert all(-1 < v < 1 for v in values)
    assert normalize(0) == 0.0


def test_single_word_compound(lexicon):
    assert score("good", lexicon).compound == pytest.approx(0.4404, abs=1e-4)
    assert score("", lexicon).polarity == Polarity.NEUTRAL


def test_heuristics(lexicon):
    analyzer = SentimentAnalyzer(lexicon)
    base = analyzer.score("the app is good").compound
    assert analyzer.score("the app is very good").compound > base
    assert analyzer.score("the app is slightly good").compound < base
    assert analyzer.score("the app is GOOD").compound > base
    assert analyzer.score("the app is good!!!").compound > base
    assert analyzer.score("the app is not good").polarity == Polarity.NEGATIVE
    assert analyzer.score("the app is not bad").polarity == Polarity.POSITIVE
    assert analyzer.score("the app is good but useless").polarity == Polarity.NEGATIVE


def test_exclamation_emphasis_is_capped(lexicon):
    analyzer = SentimentAnalyzer(lexicon)
    assert analyzer.score("great app!!!").compound == analyzer.score("great app!!!!!!").compound


def test_proportions_sum_to_one(lexicon):
    result = score("Great app but the sync is terrible", lexicon)
    assert result.pos > 0
    assert result.neg > 0
    assert result.pos + result.neg + result.neu == pytest.approx(1.0, abs=0.002)


def test_negated_lexicon_flips_compound(lexicon):
    plain = SentimentLexicon(lexicon.valences)
    flipped = plain.negated()
    for text in _sentences():
        expected = -score(text, plain).compound
        assert score(text, flipped).compound == pytest.approx(expected, abs=1e-12), text


def test_lexicon_pickles(lexicon):
    import pickle

    restored = pickle.loads(pickle.dumps(lexicon))
    assert dict(restored.valences) == dict(lexicon.valences)
    assert restored.negations == lexicon.negations


def test_lexicon_rejects_out_of_range_valence(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("great\t5.5\n", encoding="utf-8")
    with pytest.raises(DataError, match="out of range"):
        load_lexicon(path)


def test_lexicon_rejects_non_numeric(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("good\t1.9\ngreat\tvery\n", encoding="utf-8")
    with pytest.raises(DataError) as excinfo:
        load_lexicon(path)
    assert excinfo.value.line == 2


def _reference_polarities(fixtures_dir):
    rows = []
    for line in (fixtures_dir / "sentiment_reference.tsv").read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            polarity, text = line.split("\t")
            rows.append((text, Polarity(polarity)))
    return rows


def test_polarity_agreement_with_reference_labels(analyzer, fixtures_dir):
    rows = _reference_polarities(fixtures_dir)
    assert len(rows) == 200
    assert {polarity for _, polarity in rows} == set(Polarity)
    agree = sum(analyzer.score(text).polarity == polarity for text, polarity in rows)
    assert agree / len(rows) >= 0.9

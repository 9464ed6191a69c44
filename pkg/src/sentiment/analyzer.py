"""
Rule-augmented lexicon sentiment scoring

Sums word valences from the lexicon after adjusting each one with a fixed
set of heuristics, then squashes the sum into [-1, 1]:

    compound = s / sqrt(s^2 + alpha),  alpha = 15

Heuristics: booster/dampener words (and "kind of"/"sort of"), negation in the
three preceding words, ALL-CAPS emphasis, "!" emphasis (up to three) and
"?" emphasis, and contrastive "but" re-weighting.
"""

import math
import string
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from src.sentiment.lexicon import SentimentLexicon

ALPHA = 15.0

# Empirical increments of the reference rule-based model
CAPS_INCREMENT = 0.733
NEGATION_SCALAR = -0.74
EXCLAMATION_INCREMENT = 0.292
MAX_EXCLAMATIONS = 3
QUESTION_INCREMENT = 0.18
MAX_QUESTION_AMPLIFIER = 0.96

NEGATION_WINDOW = 3
# Booster effect decays with distance from the sentiment word
BOOSTER_DECAY = (1.0, 0.95, 0.9)

BUT_BEFORE_WEIGHT = 0.5
BUT_AFTER_WEIGHT = 1.5

DEFAULT_POSITIVE_THRESHOLD = 0.05
DEFAULT_NEGATIVE_THRESHOLD = -0.05


class Polarity(str, Enum):
    POSITIVE = "positive"
    NEUTRAL = "neutral"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class SentimentResult:
    compound: float
    polarity: Polarity
    pos: float = 0.0
    neg: float = 0.0
    neu: float = 0.0


def normalize(score: float, alpha: float = ALPHA) -> float:
    """Map an unbounded valence sum into [-1, 1]"""
    if score == 0:
        return 0.0
    value = score / math.sqrt(score * score + alpha)
    return max(-1.0, min(1.0, value))


def classify(
    compound: float,
    positive_threshold: float = DEFAULT_POSITIVE_THRESHOLD,
    negative_threshold: float = DEFAULT_NEGATIVE_THRESHOLD,
) -> Polarity:
    """
    Tri-class polarity of a compound score

    positive iff x >= positive_threshold, negative iff x <= negative_threshold,
    neutral otherwise.
    """
    if compound >= positive_threshold:
        return Polarity.POSITIVE
    if compound <= negative_threshold:
        return Polarity.NEGATIVE
    return Polarity.NEUTRAL


def _strip_word(token: str) -> str:
    stripped = token.strip(string.punctuation)
    # pure punctuation (emoticons) is kept verbatim
    return stripped or token


def _caps_differential(words: List[str]) -> bool:
    """True when some, but not all, words are written in ALL CAPS"""
    caps = sum(1 for word in words if word.isupper())
    return 0 < caps < len(words)


class SentimentAnalyzer:
    """
    Scores text against one SentimentLexicon
    """

    def __init__(
        self,
        lexicon: SentimentLexicon,
        positive_threshold: float = DEFAULT_POSITIVE_THRESHOLD,
        negative_threshold: float = DEFAULT_NEGATIVE_THRESHOLD,
    ):
        if positive_threshold <= negative_threshold:
            raise ValueError("positive_threshold must be greater than negative_threshold")
        self.lexicon = lexicon
        self.positive_threshold = positive_threshold
        self.negative_threshold = negative_threshold

    def classify(self, compound: float) -> Polarity:
        return classify(compound, self.positive_threshold, self.negative_threshold)

    def score(self, text: str) -> SentimentResult:
        """
        Score one text

        Args:
            text: Spell-corrected review text with casing and punctuation

        Returns:
            SentimentResult with compound score and polarity
        """
        words = [_strip_word(token) for token in text.split()]
        if not words:
            return SentimentResult(0.0, self.classify(0.0))

        lowered = [word.lower() for word in words]
        caps_diff = _caps_differential(words)

        sentiments: List[float] = []
        for i, word in enumerate(words):
            low = lowered[i]
            if low in self.lexicon.boosters:
                sentiments.append(0.0)
                continue
            if low in ("kind", "sort") and i + 1 < len(words) and lowered[i + 1] == "of":
                sentiments.append(0.0)
                continue
            sentiments.append(self._valence(i, words, lowered, caps_diff))

        sentiments = self._but_check(lowered, sentiments)
        total = math.fsum(sentiments)
        amplifier = self._punctuation_emphasis(text)
        if total > 0:
            total += amplifier
        elif total < 0:
            total -= amplifier

        compound = normalize(total)
        pos, neg, neu = self._proportions(sentiments, amplifier)
        return SentimentResult(compound, self.classify(compound), pos, neg, neu)

    def _is_negation(self, word: str) -> bool:
        return word in self.lexicon.negations or word.endswith("n't")

    def _booster(self, word: str, low: str, valence: float, caps_diff: bool) -> float:
        scalar = self.lexicon.boosters.get(low, 0.0)
        if scalar == 0.0:
            return 0.0
        if valence < 0:
            scalar = -scalar
        if word.isupper() and caps_diff:
            scalar += CAPS_INCREMENT if valence > 0 else -CAPS_INCREMENT
        return scalar

    def _valence(self, i: int, words: List[str], lowered: List[str], caps_diff: bool) -> float:
        low = lowered[i]
        base: Optional[float] = self.lexicon.valences.get(low)
        if base is None:
            return 0.0
        valence = base

        # "no" directly before another sentiment word acts as a negator only
        if low == "no" and i + 1 < len(words) and lowered[i + 1] in self.lexicon.valences:
            valence = 0.0
        if (i > 0 and lowered[i - 1] == "no") or (i > 1 and lowered[i - 2] == "no") or (
            i > 2 and lowered[i - 3] == "no" and lowered[i - 1] in ("or", "nor")
        ):
            valence = base * NEGATION_SCALAR

        if words[i].isupper() and caps_diff:
            valence += CAPS_INCREMENT if valence > 0 else -CAPS_INCREMENT

        for distance in range(1, NEGATION_WINDOW + 1):
            j = i - distance
            if j < 0:
                break
            previous = lowered[j]
            if previous in self.lexicon.valences:
                continue
            scalar = self._booster(words[j], previous, valence, caps_diff)
            valence += scalar * BOOSTER_DECAY[distance - 1]
            valence = self._negation_check(valence, lowered, i, distance)
            if distance == 3:
                valence = self._bigram_booster(valence, lowered, i)

        return self._least_check(valence, lowered, i)

    def _negation_check(self, valence: float, lowered: List[str], i: int, distance: int) -> float:
        previous = lowered[i - distance]
        if distance >= 2:
            pair = (lowered[i - distance], lowered[i - distance + 1])
            if pair[0] == "never" and pair[1] in ("so", "this"):
                return valence * 1.25
            if pair == ("without", "doubt"):
                return valence
        if self._is_negation(previous):
            return valence * NEGATION_SCALAR
        return valence

    def _bigram_booster(self, valence: float, lowered: List[str], i: int) -> float:
        bigram = f"{lowered[i - 2]} {lowered[i - 1]}"
        scalar = self.lexicon.boosters.get(bigram)
        if scalar is None:
            return valence
        return valence + (scalar if valence >= 0 else -scalar)

    def _least_check(self, valence: float, lowered: List[str], i: int) -> float:
        if i > 0 and lowered[i - 1] == "least" and lowered[i - 1] not in self.lexicon.valences:
            if i == 1 or lowered[i - 2] not in ("at", "very"):
                return valence * NEGATION_SCALAR
        return valence

    @staticmethod
    def _but_check(lowered: List[str], sentiments: List[float]) -> List[float]:
        if "but" not in lowered:
            return sentiments
        pivot = lowered.index("but")
        return [
            value * BUT_BEFORE_WEIGHT if k < pivot else value * BUT_AFTER_WEIGHT if k > pivot else value
            for k, value in enumerate(sentiments)
        ]

    @staticmethod
    def _punctuation_emphasis(text: str) -> float:
        amplifier = min(text.count("!"), MAX_EXCLAMATIONS) * EXCLAMATION_INCREMENT
        questions = text.count("?")
        if questions > 3:
            amplifier += MAX_QUESTION_AMPLIFIER
        elif questions > 1:
            amplifier += questions * QUESTION_INCREMENT
        return amplifier

    @staticmethod
    def _proportions(sentiments: List[float], amplifier: float):
        pos_sum = sum(value + 1 for value in sentiments if value > 0)
        neg_sum = sum(value - 1 for value in sentiments if value < 0)
        neu_count = sum(1 for value in sentiments if value == 0)

        if pos_sum > abs(neg_sum):
            pos_sum += amplifier
        elif pos_sum < abs(neg_sum):
            neg_sum -= amplifier

        total = pos_sum + abs(neg_sum) + neu_count
        if total == 0:
            return 0.0, 0.0, 0.0
        return (
            round(abs(pos_sum / total), 3),
            round(abs(neg_sum / total), 3),
            round(abs(neu_count / total), 3),
        )


def score(text: str, lex: SentimentLexicon) -> SentimentResult:
    """Score text with default polarity thresholds"""
    return SentimentAnalyzer(lex).score(text)

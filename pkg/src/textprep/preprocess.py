"""
Review text preprocessing: tokenize, spell-correct, drop stopwords, stem

Produces the two views the detector needs: spell-corrected text with casing
and punctuation intact (for sentiment) and content stems (for values and
feature matching).
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Tuple

from src.textprep.spelling import FrequencyList, correct_spelling
from src.textprep.stemmer import stem
from src.textprep.stopwords import remove_stopwords
from src.textprep.tokenizer import detokenize, tokenize


@dataclass(frozen=True)
class PreprocessedReview:
    review_id: str
    corrected_text: str
    content_stems: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def token_count(self) -> int:
        """T_R: number of content stems"""
        return len(self.content_stems)


def preprocess(
    text: str,
    freq: FrequencyList,
    stoplist: FrozenSet[str],
    review_id: str = "",
) -> PreprocessedReview:
    """
    Run the full preprocessing chain on one review

    Spelling is corrected before stopword removal so misspelt stopwords are
    still removed.

    Args:
        text: Raw review text
        freq: Known-word frequency list
        stoplist: Stopwords to drop from the content view
        review_id: Identifier carried into the result

    Returns:
        PreprocessedReview
    """
    corrected = correct_spelling(tokenize(text), freq)
    content = remove_stopwords(corrected, stoplist)
    return PreprocessedReview(
        review_id=review_id,
        corrected_text=detokenize(corrected),
        content_stems=tuple(stem(token.surface) for token in content),
    )


class TextPreprocessor:
    """
    Preprocessing bound to one frequency list and stoplist
    """

    def __init__(self, freq: FrequencyList, stoplist: FrozenSet[str]):
        self.freq = freq
        self.stoplist = stoplist

    def __call__(self, text: str, review_id: str = "") -> PreprocessedReview:
        return preprocess(text, self.freq, self.stoplist, review_id=review_id)

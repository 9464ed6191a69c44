"""
Text preprocessing: tokenization, spell correction, stopwords, stemming
"""

from src.textprep.preprocess import PreprocessedReview, TextPreprocessor, preprocess
from src.textprep.spelling import FrequencyList, correct_spelling, levenshtein, load_frequency_list
from src.textprep.stemmer import stem
from src.textprep.stopwords import load_stoplist, remove_stopwords
from src.textprep.tokenizer import PUNCTUATION, WORD, Token, count_words, detokenize, tokenize

__all__ = [
    "PUNCTUATION",
    "WORD",
    "FrequencyList",
    "PreprocessedReview",
    "TextPreprocessor",
    "Token",
    "correct_spelling",
    "count_words",
    "detokenize",
    "levenshtein",
    "load_frequency_list",
    "load_stoplist",
    "preprocess",
    "remove_stopwords",
    "stem",
    "tokenize",
]

"""
Schwartz values dictionary and keyword matching
"""

from src.values.dictionary import (
    ANTONYM,
    CATEGORY_NAMES,
    EXCLUDED_ITEMS,
    EXPECTED_ITEM_COUNTS,
    SYNONYM,
    ValueCategory,
    ValueItem,
    ValuesDictionary,
    build_dictionary,
    load_dictionary,
)
from src.values.matcher import MatchOutcome, ValueMatch, match_values

__all__ = [
    "ANTONYM",
    "CATEGORY_NAMES",
    "EXCLUDED_ITEMS",
    "EXPECTED_ITEM_COUNTS",
    "SYNONYM",
    "MatchOutcome",
    "ValueCategory",
    "ValueItem",
    "ValueMatch",
    "ValuesDictionary",
    "build_dictionary",
    "load_dictionary",
    "match_values",
]

"""
English Snowball (Porter2) stemmer

Follows the published algorithm definition step by step. Regions R1 and R2
are tracked as start offsets into the word, which stay fixed while suffixes
are rewritten.
"""

from functools import lru_cache
from typing import Optional, Tuple

VOWELS = frozenset("aeiouy")
DOUBLES = ("bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt")
LI_ENDINGS = frozenset("cdeghkmnrt")

# Whole-word exceptions, checked before anything else
EXCEPTIONS = {
    "skis": "ski",
    "skies": "sky",
    "dying": "die",
    "lying": "lie",
    "tying": "tie",
    "idly": "idl",
    "gently": "gentl",
    "ugly": "ugli",
    "early": "earli",
    "only": "onli",
    "singly": "singl",
    "sky": "sky",
    "news": "news",
    "howe": "howe",
    "atlas": "atlas",
    "cosmos": "cosmos",
    "bias": "bias",
    "andes": "andes",
}

# Words left alone once step 1a has run
POST_1A_EXCEPTIONS = frozenset(
    ["inning", "outing", "canning", "herring", "earring", "proceed", "exceed", "succeed"]
)

R1_PREFIXES = ("gener", "commun", "arsen")

STEP_1B_SUFFIXES = ("eedly", "ingly", "edly", "eed", "ing", "ed")

# (suffix, replacement) ordered longest first; None replacement marks the
# suffixes with an extra preceding-letter condition
STEP_2_RULES: Tuple[Tuple[str, Optional[str]], ...] = (
    ("ization", "ize"),
    ("ational", "ate"),
    ("fulness", "ful"),
    ("ousness", "ous"),
    ("iveness", "ive"),
    ("tional", "tion"),
    ("biliti", "ble"),
    ("lessli", "less"),
    ("entli", "ent"),
    ("ation", "ate"),
    ("alism", "al"),
    ("aliti", "al"),
    ("ousli", "ous"),
    ("iviti", "ive"),
    ("fulli", "ful"),
    ("enci", "ence"),
    ("anci", "ance"),
    ("abli", "able"),
    ("izer", "ize"),
    ("ator", "ate"),
    ("alli", "al"),
    ("bli", "ble"),
    ("ogi", None),
    ("li", None),
)

STEP_3_RULES: Tuple[Tuple[str, str], ...] = (
    ("ational", "ate"),
    ("tional", "tion"),
    ("alize", "al"),
    ("icate", "ic"),
    ("iciti", "ic"),
    ("ative", ""),
    ("ical", "ic"),
    ("ness", ""),
    ("ful", ""),
)

STEP_4_SUFFIXES = (
    "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent",
    "ism", "ate", "iti", "ous", "ive", "ize", "ion", "al", "er", "ic",
)


def _is_vowel(ch: str) -> bool:
    return ch in VOWELS


def _region_start(word: str, start: int) -> int:
    """Offset just past the first non-vowel that follows a vowel, scanning from start"""
    for i in range(start + 1, len(word)):
        if not _is_vowel(word[i]) and _is_vowel(word[i - 1]):
            return i + 1
    return len(word)


def _regions(word: str) -> Tuple[int, int]:
    for prefix in R1_PREFIXES:
        if word.startswith(prefix):
            r1 = len(prefix)
            break
    else:
        r1 = _region_start(word, 0)
    r2 = _region_start(word, r1)
    return r1, r2


def _ends_with_short_syllable(word: str) -> bool:
    if len(word) == 2:
        return _is_vowel(word[0]) and not _is_vowel(word[1])
    if len(word) >= 3:
        return (
            not _is_vowel(word[-3])
            and _is_vowel(word[-2])
            and not _is_vowel(word[-1])
            and word[-1] not in "wxY"
        )
    return False


def _is_short(word: str, r1: int) -> bool:
    return r1 >= len(word) and _ends_with_short_syllable(word)


def _mark_ys(word: str) -> str:
    chars = list(word)
    if chars and chars[0] == "y":
        chars[0] = "Y"
    for i in range(1, len(chars)):
        if chars[i] == "y" and _is_vowel(chars[i - 1]):
            chars[i] = "Y"
    return "".join(chars)


def _step_0(word: str) -> str:
    for suffix in ("'s'", "'s", "'"):
        if word.endswith(suffix):
            return word[: -len(suffix)]
    return word


def _step_1a(word: str) -> str:
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("ied") or word.endswith("ies"):
        return word[:-2] if len(word) > 4 else word[:-1]
    if word.endswith("us") or word.endswith("ss"):
        return word
    if word.endswith("s"):
        if any(_is_vowel(ch) for ch in word[:-2]):
            return word[:-1]
    return word


def _step_1b(word: str, r1: int) -> str:
    for suffix in STEP_1B_SUFFIXES:
        if not word.endswith(suffix):
            continue
        if suffix in ("eed", "eedly"):
            if len(word) - len(suffix) >= r1:
                return word[: -len(suffix)] + "ee"
            return word
        stem = word[: -len(suffix)]
        if not any(_is_vowel(ch) for ch in stem):
            return word
        if stem.endswith(("at", "bl", "iz")):
            return stem + "e"
        if stem.endswith(DOUBLES):
            return stem[:-1]
        if _is_short(stem, r1):
            return stem + "e"
        return stem
    return word


def _step_1c(word: str) -> str:
    if len(word) > 2 and word[-1] in "yY" and not _is_vowel(word[-2]):
        return word[:-1] + "i"
    return word


def _step_2(word: str, r1: int) -> str:
    for suffix, replacement in STEP_2_RULES:
        if not word.endswith(suffix):
            continue
        start = len(word) - len(suffix)
        if start < r1:
            return word
        if suffix == "ogi":
            return word[:-1] if start > 0 and word[start - 1] == "l" else word
        if suffix == "li":
            return word[:-2] if start > 0 and word[start - 1] in LI_ENDINGS else word
        return word[:start] + replacement
    return word


def _step_3(word: str, r1: int, r2: int) -> str:
    for suffix, replacement in STEP_3_RULES:
        if not word.endswith(suffix):
            continue
        start = len(word) - len(suffix)
        if start < r1:
            return word
        if suffix == "ative" and start < r2:
            return word
        return word[:start] + replacement
    return word


def _step_4(word: str, r2: int) -> str:
    for suffix in STEP_4_SUFFIXES:
        if not word.endswith(suffix):
            continue
        start = len(word) - len(suffix)
        if start < r2:
            return word
        if suffix == "ion":
            return word[:start] if start > 0 and word[start - 1] in "st" else word
        return word[:start]
    return word


def _step_5(word: str, r1: int, r2: int) -> str:
    last = len(word) - 1
    if word.endswith("e"):
        if last >= r2:
            return word[:-1]
        if last >= r1 and not _ends_with_short_syllable(word[:-1]):
            return word[:-1]
        return word
    if word.endswith("l") and last >= r2 and len(word) > 1 and word[-2] == "l":
        return word[:-1]
    return word


@lru_cache(maxsize=65536)
def stem(word: str) -> str:
    """
    Stem a lowercase English word with the Porter2 algorithm

    Args:
        word: Lowercase word token

    Returns:
        The stemmed form
    """
    if len(word) <= 2:
        return word
    if word in EXCEPTIONS:
        return EXCEPTIONS[word]

    if word.startswith("'"):
        word = word[1:]
    word = _mark_ys(word)
    r1, r2 = _regions(word)

    word = _step_0(word)
    word = _step_1a(word)
    if word in POST_1A_EXCEPTIONS:
        return word

    word = _step_1b(word, r1)
    word = _step_1c(word)
    word = _step_2(word, r1)
    word = _step_3(word, r1, r2)
    word = _step_4(word, r2)
    word = _step_5(word, r1, r2)
    return word.replace("Y", "y")

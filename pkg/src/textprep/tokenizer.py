"""
Word/punctuation tokenizer shared by every text view of a review
"""

import re
from dataclasses import dataclass, replace
from typing import Iterable, List

WORD = "word"
PUNCTUATION = "punctuation"

# Curly apostrophes are folded into ASCII before matching
_APOSTROPHES = str.maketrans({"’": "'", "‘": "'", "ʼ": "'"})

# A word is a maximal run of letters, digits and apostrophes that starts with a
# letter or digit; everything else that is not whitespace is punctuation.
_TOKEN_RE = re.compile(
    r"(?P<word>[^\W_](?:[^\W_]|')*)|(?P<punct>(?:[^\w\s]|_)+)"
)


@dataclass(frozen=True)
class Token:
    """
    One unit of review text

    `surface` is lowercased for words; `original` keeps the casing as
    typed. `spaced` records whether whitespace preceded the token so the
    stream can be reassembled.
    """

    surface: str
    kind: str
    position: int
    original: str = ""
    spaced: bool = False

    @property
    def is_word(self) -> bool:
        return self.kind == WORD

    def with_surface(self, surface: str) -> "Token":
        """Copy of this token carrying a new word, casing adapted from the original"""
        return replace(self, surface=surface, original=_match_case(self.original, surface))


def _match_case(template: str, word: str) -> str:
    if template.isupper() and len(template) > 1:
        return word.upper()
    if template[:1].isupper():
        return word[:1].upper() + word[1:]
    return word


def tokenize(text: str) -> List[Token]:
    """
    Split text into word and punctuation tokens

    Args:
        text: Raw review text

    Returns:
        Tokens in input order; word surfaces lowercased
    """
    if not text:
        return []

    text = text.translate(_APOSTROPHES)
    tokens: List[Token] = []
    last_end = 0
    for match in _TOKEN_RE.finditer(text):
        chunk = match.group(0)
        spaced = bool(tokens) and match.start() > last_end
        last_end = match.end()
        if match.lastgroup == "word":
            tokens.append(Token(chunk.lower(), WORD, len(tokens), chunk, spaced))
        else:
            tokens.append(Token(chunk, PUNCTUATION, len(tokens), chunk, spaced))
    return tokens


def word_tokens(tokens: Iterable[Token]) -> List[Token]:
    return [token for token in tokens if token.is_word]


def count_words(text: str) -> int:
    """Number of word tokens in text (punctuation excluded)"""
    return sum(1 for token in tokenize(text) if token.is_word)


def detokenize(tokens: Iterable[Token]) -> str:
    """
    Reassemble tokens into text

    Tokens that were separated by whitespace are joined with one space,
    adjacent tokens are joined directly.
    """
    parts: List[str] = []
    for token in tokens:
        if parts and token.spaced:
            parts.append(" ")
        parts.append(token.original or token.surface)
    return "".join(parts)

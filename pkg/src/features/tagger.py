"""
Lexicon + suffix-rule part-of-speech tagger on the universal 12-tag set
"""

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Union

from loguru import logger

from src.config import asset_path
from src.exceptions import DataError
from src.textprep.tokenizer import Token

TAGS = ("NOUN", "VERB", "ADJ", "ADV", "DET", "PRON", "ADP", "CONJ", "NUM", "PRT", "PUNCT", "X")

# Checked in order, first hit wins
SUFFIX_RULES = (
    ("ly", "ADV"),
    ("ing", "VERB"),
    ("ed", "VERB"),
    ("ous", "ADJ"),
    ("ful", "ADJ"),
    ("ive", "ADJ"),
)

DEFAULT_TAG = "NOUN"


@dataclass(frozen=True)
class PosTaggedToken:
    surface: str
    tag: str
    position: int = 0


def load_pos_lexicon(path: Union[str, Path]) -> Dict[str, str]:
    """
    Load the word -> most frequent tag lexicon

    Args:
        path: UTF-8 TSV "word<TAB>tag"

    Returns:
        Dictionary of lowercase word to tag
    """
    path = Path(path)
    lexicon: Dict[str, str] = {}
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise DataError("expected 'word<TAB>tag'", path=str(path), line=line_no)
            word, tag = parts[0].strip().lower(), parts[1].strip().upper()
            if tag not in TAGS:
                raise DataError(f"unknown tag {tag!r}", path=str(path), line=line_no)
            lexicon[word] = tag
    logger.debug(f"Loaded POS lexicon: {len(lexicon)} words from {path.name}")
    return lexicon


@lru_cache(maxsize=1)
def default_pos_lexicon() -> Dict[str, str]:
    return load_pos_lexicon(asset_path("pos_lexicon"))


def guess_tag(word: str) -> str:
    """Tag for a word missing from the lexicon"""
    if any(ch.isdigit() for ch in word):
        return "NUM"
    for suffix, tag in SUFFIX_RULES:
        if word.endswith(suffix) and len(word) > len(suffix) + 1:
            return tag
    return DEFAULT_TAG


def tag_pos(tokens: Iterable[Token], lexicon: Optional[Mapping[str, str]] = None) -> List[PosTaggedToken]:
    """
    Tag a token stream

    Args:
        tokens: Tokens from tokenize(); word surfaces are lowercase
        lexicon: word -> tag lookup; the bundled lexicon when omitted

    Returns:
        One PosTaggedToken per input token
    """
    if lexicon is None:
        lexicon = default_pos_lexicon()

    tagged = []
    for token in tokens:
        if token.is_word:
            tag = lexicon.get(token.surface) or guess_tag(token.surface)
        else:
            tag = "PUNCT"
        tagged.append(PosTaggedToken(token.surface, tag, token.position))
    return tagged

"""
Stopword list loading and removal
"""

from pathlib import Path
from typing import FrozenSet, Iterable, List, Union

from loguru import logger

from src.exceptions import DataError
from src.textprep.tokenizer import Token


def load_stoplist(path: Union[str, Path]) -> FrozenSet[str]:
    """
    Load a stoplist, one lowercase word per line

    Args:
        path: UTF-8 text file; blank lines and "#" comments are ignored

    Returns:
        Frozen set of stopwords
    """
    path = Path(path)
    words = set()
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            word = line.strip()
            if not word or word.startswith("#"):
                continue
            if word != word.lower():
                raise DataError(f"stopword must be lowercase: {word!r}", path=str(path), line=line_no)
            words.add(word)
    logger.debug(f"Loaded {len(words)} stopwords from {path.name}")
    return frozenset(words)


def remove_stopwords(tokens: Iterable[Token], stoplist: FrozenSet[str]) -> List[Token]:
    """
    Content view of a token stream: word tokens that are not stopwords

    Punctuation tokens are dropped as well.
    """
    return [token for token in tokens if token.is_word and token.surface not in stoplist]

"""
Edit-distance spell correction against a word frequency list

Unknown words are replaced by the most frequent known word within an edit
distance of 1, else within 2, else kept as typed. Candidates are generated
from the misspelling (deletes, replacements, inserts) and looked up, so the
cost does not grow with the size of the list.
"""

from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple, Union

from loguru import logger

from src.exceptions import DataError
from src.textprep.tokenizer import Token

MAX_EDIT_DISTANCE = 2
CORRECTION_CACHE_SIZE = 8192


def levenshtein(a: str, b: str, max_distance: Optional[int] = None) -> int:
    """
    Minimum number of single-character insertions, deletions and
    substitutions turning a into b

    Args:
        a: Source string
        b: Target string
        max_distance: When given, stop early and return max_distance + 1
            as soon as the distance is known to exceed it

    Returns:
        Edit distance
    """
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    if max_distance is not None and len(a) - len(b) > max_distance:
        return max_distance + 1

    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (ca != cb),
                )
            )
        if max_distance is not None and min(current) > max_distance:
            return max_distance + 1
        previous = current
    return previous[-1]


class FrequencyList:
    """
    Known English words with occurrence counts

    Contents are fixed after construction. Corrections are memoised per
    instance in a bounded LRU cache.
    """

    def __init__(self, counts: Mapping[str, int]):
        for word, count in counts.items():
            if not word or word != word.lower():
                raise DataError(f"frequency list key must be lowercase: {word!r}")
            if count <= 0:
                raise DataError(f"frequency list count must be positive: {word!r}={count}")
        self._counts: Dict[str, int] = dict(counts)
        self._alphabet: str = "".join(sorted({ch for word in self._counts for ch in word}))
        self._best = lru_cache(maxsize=CORRECTION_CACHE_SIZE)(self._best_candidate)

    def __contains__(self, word: object) -> bool:
        return word in self._counts

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FrequencyList) and self._counts == other._counts

    def count(self, word: str) -> int:
        return self._counts.get(word, 0)

    def words(self) -> List[str]:
        return sorted(self._counts)

    def extended(self, words: Iterable[str], count: int = 1) -> "FrequencyList":
        """
        Copy of this list with extra vocabulary added

        Words already present keep their count.

        Args:
            words: Words to add (lowercased on the way in)
            count: Count assigned to new words

        Returns:
            New FrequencyList
        """
        merged = dict(self._counts)
        for word in words:
            word = word.strip().lower()
            if word and word not in merged:
                merged[word] = count
        return FrequencyList(merged)

    def edits(self, word: str) -> Set[str]:
        """Strings one delete, replacement or insertion away from word"""
        splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
        deletes = [left + right[1:] for left, right in splits if right]
        replaces = [left + ch + right[1:] for left, right in splits if right for ch in self._alphabet]
        inserts = [left + ch + right for left, right in splits for ch in self._alphabet]
        return set(deletes + replaces + inserts)

    def candidates(self, word: str, distance: int) -> List[Tuple[str, int]]:
        """Known words at exactly `distance` edits from word, with counts"""
        if distance < 1 or distance > MAX_EDIT_DISTANCE:
            raise ValueError(f"distance must be between 1 and {MAX_EDIT_DISTANCE}: {distance}")
        ring = self.edits(word)
        ring.discard(word)
        if distance == 2:
            nearer = ring
            ring = {far for near in nearer for far in self.edits(near) if far in self._counts}
            ring -= nearer
            ring.discard(word)
        return sorted((known, self._counts[known]) for known in ring if known in self._counts)

    def _best_candidate(self, word: str) -> str:
        for distance in range(1, MAX_EDIT_DISTANCE + 1):
            found = self.candidates(word, distance)
            if found:
                return min(found, key=lambda item: (-item[1], item[0]))[0]
        return word

    def correction(self, word: str) -> str:
        """
        Best replacement for a word

        Distance-1 candidates strictly beat distance-2 ones; ties go to the
        higher count, then to lexicographic order.
        """
        if word in self._counts:
            return word
        return self._best(word)


def load_frequency_list(path: Union[str, Path]) -> FrequencyList:
    """
    Load a "word<TAB>count" frequency list

    Args:
        path: UTF-8 text file, one entry per line

    Returns:
        FrequencyList
    """
    path = Path(path)
    counts: Dict[str, int] = {}
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise DataError("expected 'word<TAB>count'", path=str(path), line=line_no)
            word, raw_count = parts[0].strip(), parts[1].strip()
            try:
                count = int(raw_count)
            except ValueError:
                raise DataError(f"count is not an integer: {raw_count!r}", path=str(path), line=line_no)
            if count <= 0 or word != word.lower():
                raise DataError(f"invalid entry {word!r}={count}", path=str(path), line=line_no)
            counts[word] = counts.get(word, 0) + count

    if not counts:
        raise DataError("frequency list is empty", path=str(path))
    logger.debug(f"Loaded {len(counts)} known words from {path.name}")
    return FrequencyList(counts)


def correct_spelling(tokens: List[Token], freq: FrequencyList) -> List[Token]:
    """
    Replace misspelt word tokens with their best known candidate

    Punctuation and tokens containing digits pass through untouched.

    Args:
        tokens: Token stream from tokenize()
        freq: Known-word frequency list

    Returns:
        Token stream of the same length
    """
    corrected = []
    for token in tokens:
        if not token.is_word or token.surface in freq or any(ch.isdigit() for ch in token.surface):
            corrected.append(token)
            continue
        replacement = freq.correction(token.surface)
        if replacement != token.surface:
            logger.debug(f"Spelling: {token.surface!r} -> {replacement!r}")
            token = token.with_surface(replacement)
        corrected.append(token)
    return corrected

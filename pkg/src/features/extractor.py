"""
App feature extraction from store descriptions

Sentence patterns first cut a description into candidate clauses: sentences
are split at punctuation, feature-cue phrases ("you can", "allows you to",
...) are cut out, and enumerations are split at "and"/"or" when a verb
follows. Each clause is then POS-tagged and scanned left to right with the
POS pattern set, longest pattern first, without overlaps.
"""

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

from loguru import logger

from src.config import asset_path
from src.exceptions import DataError
from src.features.tagger import TAGS, PosTaggedToken, tag_pos
from src.textprep.stemmer import stem
from src.textprep.tokenizer import Token, tokenize, word_tokens

MIN_FEATURE_WORDS = 2
MAX_FEATURE_WORDS = 4

# Tags matched by a pattern but left out of the feature itself
DROPPED_TAGS = frozenset(["DET", "CONJ"])

DEFAULT_PATTERNS: Tuple[Tuple[str, ...], ...] = (
    ("VERB", "NOUN"),
    ("NOUN", "NOUN"),
    ("ADJ", "NOUN"),
    ("VERB", "ADJ", "NOUN"),
    ("VERB", "NOUN", "NOUN"),
    ("NOUN", "CONJ", "NOUN"),
    ("VERB", "DET", "NOUN"),
    ("ADJ", "NOUN", "NOUN"),
)

CUE_PHRASES: Tuple[Tuple[str, ...], ...] = tuple(
    tuple(phrase.split())
    for phrase in (
        "you will be able to",
        "you'll be able to",
        "you can easily",
        "you can",
        "allows you to",
        "allow you to",
        "lets you",
        "let you",
        "enables you to",
        "enable you to",
        "helps you",
        "help you",
    )
)

ENUMERATION_CONJUNCTIONS = frozenset(["and", "or"])

Pattern = Tuple[str, ...]
PathLike = Union[str, Path]


@dataclass(frozen=True)
class AppFeature:
    tokens: Tuple[str, ...]
    stems: Tuple[str, ...]
    source_app: str = ""
    source_pattern: str = ""

    @property
    def phrase(self) -> str:
        return " ".join(self.tokens)

    def to_dict(self) -> dict:
        return {
            "app_id": self.source_app,
            "feature": self.phrase,
            "stems": list(self.stems),
            "pattern": self.source_pattern,
        }


def load_patterns(path: PathLike) -> Tuple[Pattern, ...]:
    """
    Load POS patterns, one space-separated tag sequence per line

    Args:
        path: Pattern file; "#" starts a comment

    Returns:
        Patterns in file order
    """
    path = Path(path)
    patterns: List[Pattern] = []
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            pattern = tuple(tag.upper() for tag in line.split())
            unknown = [tag for tag in pattern if tag not in TAGS]
            if unknown:
                raise DataError(f"unknown tag(s) in pattern: {', '.join(unknown)}", path=str(path), line=line_no)
            kept = [tag for tag in pattern if tag not in DROPPED_TAGS]
            if not MIN_FEATURE_WORDS <= len(kept) <= MAX_FEATURE_WORDS:
                raise DataError(
                    f"pattern must yield {MIN_FEATURE_WORDS}-{MAX_FEATURE_WORDS} feature words: {line!r}",
                    path=str(path),
                    line=line_no,
                )
            patterns.append(pattern)
    logger.debug(f"Loaded {len(patterns)} feature patterns from {path.name}")
    return tuple(patterns)


def _phrase_stems(phrase: str) -> Tuple[str, ...]:
    return tuple(stem(token.surface) for token in word_tokens(tokenize(phrase)))


def load_allowlist(path: PathLike) -> FrozenSet[Tuple[str, ...]]:
    """
    Load verified feature phrases, one per line

    Returns:
        Set of stem tuples; extracted features are kept only when listed
    """
    path = Path(path)
    allowed = set()
    with path.open(encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line and not line.startswith("#"):
                allowed.add(_phrase_stems(line))
    logger.debug(f"Loaded {len(allowed)} allowlisted features from {path.name}")
    return frozenset(allowed)


@lru_cache(maxsize=1)
def default_patterns() -> Tuple[Pattern, ...]:
    path = asset_path("patterns")
    if path.exists():
        return load_patterns(path)
    return DEFAULT_PATTERNS


def _split_sentences(tokens: Sequence[Token]) -> List[List[Token]]:
    """Punctuation ends a clause; only word tokens are kept"""
    clauses: List[List[Token]] = [[]]
    for token in tokens:
        if token.is_word:
            clauses[-1].append(token)
        elif clauses[-1]:
            clauses.append([])
    return [clause for clause in clauses if clause]


def _cut_cue_phrases(clause: List[Token]) -> List[List[Token]]:
    surfaces = [token.surface for token in clause]
    pieces: List[List[Token]] = [[]]
    i = 0
    while i < len(clause):
        for cue in CUE_PHRASES:
            if tuple(surfaces[i : i + len(cue)]) == cue:
                pieces.append([])
                i += len(cue)
                break
        else:
            pieces[-1].append(clause[i])
            i += 1
    return [piece for piece in pieces if piece]


def _split_enumerations(tagged: List[PosTaggedToken]) -> List[List[PosTaggedToken]]:
    pieces: List[List[PosTaggedToken]] = [[]]
    for i, token in enumerate(tagged):
        next_is_verb = i + 1 < len(tagged) and tagged[i + 1].tag == "VERB"
        if token.surface in ENUMERATION_CONJUNCTIONS and next_is_verb:
            pieces.append([])
            continue
        pieces[-1].append(token)
    return [piece for piece in pieces if piece]


def candidate_clauses(description: str, pos_lexicon: Optional[Mapping[str, str]] = None) -> List[List[PosTaggedToken]]:
    """Tagged clauses produced by the sentence patterns"""
    clauses: List[List[PosTaggedToken]] = []
    for sentence in _split_sentences(tokenize(description)):
        for piece in _cut_cue_phrases(sentence):
            clauses.extend(_split_enumerations(tag_pos(piece, pos_lexicon)))
    return clauses


def _scan(
    clause: List[PosTaggedToken], patterns: Sequence[Pattern]
) -> Iterable[Tuple[Pattern, List[PosTaggedToken]]]:
    ordered = sorted(patterns, key=len, reverse=True)
    tags = [token.tag for token in clause]
    i = 0
    while i < len(clause):
        for pattern in ordered:
            if tuple(tags[i : i + len(pattern)]) == pattern:
                yield pattern, clause[i : i + len(pattern)]
                i += len(pattern)
                break
        else:
            i += 1


class FeatureExtractor:
    """
    Pattern-based feature extractor bound to its assets

    Args:
        patterns: POS patterns (the bundled set when omitted)
        pos_lexicon: word -> tag lookup (the bundled lexicon when omitted)
        stoplist: Features containing a stopword are skipped, since they
            could never be found in stopword-filtered review stems
        allowlist: Verified feature stems; when given, anything else is dropped
    """

    def __init__(
        self,
        patterns: Optional[Sequence[Pattern]] = None,
        pos_lexicon: Optional[Mapping[str, str]] = None,
        stoplist: FrozenSet[str] = frozenset(),
        allowlist: Optional[FrozenSet[Tuple[str, ...]]] = None,
    ):
        self.patterns = tuple(patterns) if patterns is not None else default_patterns()
        self.pos_lexicon = pos_lexicon
        self.stoplist = stoplist
        self.allowlist = allowlist

    def extract(self, description: str, app_id: str = "") -> List[AppFeature]:
        """
        Extract features from one app description

        Args:
            description: Store description text
            app_id: App the features belong to

        Returns:
            Features in order of first occurrence, unique by stems
        """
        features: List[AppFeature] = []
        seen: Set[Tuple[str, ...]] = set()
        for clause in candidate_clauses(description, self.pos_lexicon):
            for pattern, span in _scan(clause, self.patterns):
                words = tuple(token.surface for token in span if token.tag not in DROPPED_TAGS)
                if not MIN_FEATURE_WORDS <= len(words) <= MAX_FEATURE_WORDS:
                    continue
                if any(word in self.stoplist for word in words):
                    continue
                stems = tuple(stem(word) for word in words)
                if stems in seen:
                    continue
                if self.allowlist is not None and stems not in self.allowlist:
                    continue
                seen.add(stems)
                features.append(AppFeature(words, stems, app_id, " ".join(pattern)))
        return features


def extract_features(
    description: str,
    app_id: str = "",
    patterns: Optional[Sequence[Pattern]] = None,
    pos_lexicon: Optional[Mapping[str, str]] = None,
    stoplist: FrozenSet[str] = frozenset(),
    allowlist: Optional[FrozenSet[Tuple[str, ...]]] = None,
) -> List[AppFeature]:
    """Extract features from one description with a throwaway FeatureExtractor"""
    return FeatureExtractor(patterns, pos_lexicon, stoplist, allowlist).extract(description, app_id)


def extract_catalogue(apps: Iterable, extractor: FeatureExtractor) -> Dict[str, List[AppFeature]]:
    """
    Features for every app, keyed by app_id

    Args:
        apps: AppRecord objects
        extractor: Configured FeatureExtractor

    Returns:
        app_id -> features
    """
    catalogue: Dict[str, List[AppFeature]] = {}
    for app in apps:
        catalogue[app.app_id] = extractor.extract(app.description, app.app_id)
        logger.info(f"Extracted {len(catalogue[app.app_id])} features for {app.name} ({app.app_id})")
    return catalogue

"""
Sentiment lexicon assets: word valences, booster increments, negation cues
"""

from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Dict, FrozenSet, Mapping, Optional, Union

from loguru import logger

from src.exceptions import DataError

MAX_VALENCE = 4.0

PathLike = Union[str, Path]


@dataclass(frozen=True)
class SentimentLexicon:
    """
    Immutable lookup tables used by the sentiment scorer
    """

    valences: Mapping[str, float]
    boosters: Mapping[str, float] = field(default_factory=dict)
    negations: FrozenSet[str] = frozenset()

    def __post_init__(self):
        for token, valence in self.valences.items():
            if not -MAX_VALENCE <= valence <= MAX_VALENCE:
                raise DataError(f"valence out of range for {token!r}: {valence}")
        object.__setattr__(self, "valences", MappingProxyType(dict(self.valences)))
        object.__setattr__(self, "boosters", MappingProxyType(dict(self.boosters)))
        object.__setattr__(self, "negations", frozenset(self.negations))

    def __reduce__(self):
        # MappingProxyType does not pickle; rebuild from plain dicts
        return (
            SentimentLexicon,
            (dict(self.valences), dict(self.boosters), frozenset(self.negations)),
        )

    def negated(self) -> "SentimentLexicon":
        """Same lexicon with every valence sign-flipped"""
        return SentimentLexicon(
            {token: -valence for token, valence in self.valences.items()},
            self.boosters,
            self.negations,
        )


def _read_tsv(path: Path, what: str) -> Dict[str, float]:
    table: Dict[str, float] = {}
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 2:
                raise DataError(f"expected 'token<TAB>{what}'", path=str(path), line=line_no)
            token = parts[0].strip().lower()
            try:
                table[token] = float(parts[1])
            except ValueError:
                raise DataError(f"{what} is not a number: {parts[1]!r}", path=str(path), line=line_no)
    return table


def _read_lines(path: Path) -> FrozenSet[str]:
    with path.open(encoding="utf-8") as handle:
        return frozenset(
            line.strip().lower()
            for line in handle
            if line.strip() and not line.startswith("#")
        )


def load_lexicon(
    lexicon_path: PathLike,
    booster_path: Optional[PathLike] = None,
    negation_path: Optional[PathLike] = None,
) -> SentimentLexicon:
    """
    Load the sentiment assets

    Args:
        lexicon_path: TSV "token<TAB>valence", valences in [-4, 4]
        booster_path: TSV "token<TAB>increment" (optional)
        negation_path: One negation cue per line (optional)

    Returns:
        SentimentLexicon
    """
    lexicon_path = Path(lexicon_path)
    valences = _read_tsv(lexicon_path, "valence")
    for token, valence in valences.items():
        if not -MAX_VALENCE <= valence <= MAX_VALENCE:
            raise DataError(f"valence out of range for {token!r}: {valence}", path=str(lexicon_path))

    boosters = _read_tsv(Path(booster_path), "increment") if booster_path else {}
    negations = _read_lines(Path(negation_path)) if negation_path else frozenset()

    logger.debug(
        f"Loaded sentiment lexicon: {len(valences)} valences, "
        f"{len(boosters)} boosters, {len(negations)} negation cues"
    )
    return SentimentLexicon(valences, boosters, negations)

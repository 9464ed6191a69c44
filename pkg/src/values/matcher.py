"""
Value keyword matching over preprocessed review stems

For each value item V the probability that review R expresses V is

    P(R, V) = T_V / T_R

where T_V counts the stems of R found in V's keyword set and T_R is the
number of content stems in R.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from src.values.dictionary import ValueItem, ValuesDictionary


@dataclass(frozen=True)
class ValueMatch:
    item: ValueItem
    tv: int
    tr: int
    matched_stems: Tuple[Tuple[str, str], ...] = ()

    @property
    def probability(self) -> float:
        return self.tv / self.tr


@dataclass(frozen=True)
class MatchOutcome:
    """
    Matches for one review

    `degenerate` is set when the review has no content stems, in which case
    no probability can be computed.
    """

    matches: Tuple[ValueMatch, ...] = ()
    tr: int = 0
    degenerate: bool = False

    def __iter__(self) -> Iterator[ValueMatch]:
        return iter(self.matches)

    def __len__(self) -> int:
        return len(self.matches)

    def __getitem__(self, index: int) -> ValueMatch:
        return self.matches[index]

    def by_item(self) -> Dict[str, ValueMatch]:
        return {match.item.name: match for match in self.matches}


def match_values(stems: Sequence[str], dictionary: ValuesDictionary) -> MatchOutcome:
    """
    Count value keywords in a review

    A stem listed under several items counts toward each of them. T_R counts
    stem occurrences, not distinct stems.

    Args:
        stems: Content stems of one review
        dictionary: Loaded values dictionary

    Returns:
        MatchOutcome with one ValueMatch per item that has at least one hit,
        in dictionary order
    """
    tr = len(stems)
    if tr == 0:
        return MatchOutcome(degenerate=True)

    index = dictionary.keyword_index()
    hits: Dict[str, List[Tuple[str, str]]] = defaultdict(list)
    for stemmed in stems:
        for item in index.get(stemmed, ()):
            hits[item.name].append((stemmed, item.tag(stemmed)))

    matches = [
        ValueMatch(item=item, tv=len(hits[item.name]), tr=tr, matched_stems=tuple(hits[item.name]))
        for item in dictionary.items
        if item.name in hits
    ]
    return MatchOutcome(matches=tuple(matches), tr=tr)

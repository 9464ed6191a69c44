"""
Schwartz values dictionary: model, loading and validation

The dictionary file is JSON shaped as

    {category: {item_name: {"synonyms": [...], "antonyms": [...]}}}

Entries may be written unstemmed; they are stemmed on load. Only single-word
keywords are allowed, multi-word value names are represented by single-word
proxies ("peace", "strife").
"""

import json
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple, Union

from loguru import logger

from src.exceptions import DictionaryValidationError
from src.textprep.stemmer import stem
from src.textprep.tokenizer import tokenize, word_tokens

SYNONYM = "synonym"
ANTONYM = "antonym"

# Category order follows the motivational circle
CATEGORY_DESCRIPTIONS: Dict[str, str] = {
    "Self-direction": "Independent thought and action - choosing, creating, exploring",
    "Stimulation": "Excitement, novelty, and challenge in life",
    "Hedonism": "Pleasure or sensuous gratification for oneself",
    "Achievement": "Personal success through demonstrating competence according to social standards",
    "Power": "Social status and prestige, control or dominance over people and resources",
    "Security": "Safety, harmony, and stability of society, of relationships, and of self",
    "Conformity": (
        "Restraint of actions, inclinations, and impulses likely to upset or harm others "
        "and violate social expectations or norms"
    ),
    "Tradition": (
        "Respect, commitment, and acceptance of the customs and ideas that one's culture "
        "or religion provides"
    ),
    "Benevolence": (
        "Preserving and enhancing the welfare of those with whom one is in frequent personal contact"
    ),
    "Universalism": (
        "Understanding, appreciation, tolerance, and protection for the welfare of all people and for nature"
    ),
}

CATEGORY_NAMES: Tuple[str, ...] = tuple(CATEGORY_DESCRIPTIONS)

EXPECTED_ITEM_COUNTS: Dict[str, int] = {
    "Self-direction": 7,
    "Stimulation": 3,
    "Hedonism": 3,
    "Achievement": 5,
    "Power": 4,
    "Security": 6,
    "Conformity": 3,
    "Tradition": 5,
    "Benevolence": 7,
    "Universalism": 7,
}

EXPECTED_ITEM_TOTAL = sum(EXPECTED_ITEM_COUNTS.values())

# Value items that cannot be expressed through app review keywords
EXCLUDED_ITEMS: FrozenSet[str] = frozenset(
    [
        "social power",
        "reciprocation of favours",
        "reciprocation of favors",
        "honouring of parents and elders",
        "honoring of parents and elders",
        "accepting my portion in life",
        "mature love",
        "meaning in life",
        "unity with nature",
        "protecting the environment",
    ]
)

PathLike = Union[str, Path]


def _normalize_name(name: str) -> str:
    return " ".join(name.lower().split())


@dataclass(frozen=True)
class ValueCategory:
    name: str
    description: str = ""


@dataclass(frozen=True)
class ValueItem:
    """
    One value item with its stemmed keywords

    A stem listed as both synonym and antonym is tagged as a synonym.
    """

    name: str
    category: ValueCategory
    synonyms: FrozenSet[str] = frozenset()
    antonyms: FrozenSet[str] = frozenset()
    # unstemmed keyword spellings, kept known to the spell corrector
    terms: FrozenSet[str] = field(default=frozenset(), compare=False)

    @property
    def keywords(self) -> FrozenSet[str]:
        return self.synonyms | self.antonyms

    def tag(self, keyword: str) -> Optional[str]:
        if keyword in self.synonyms:
            return SYNONYM
        if keyword in self.antonyms:
            return ANTONYM
        return None


@dataclass(frozen=True)
class ValuesDictionary:
    """
    Validated, immutable set of value items

    Equality ignores item order.
    """

    items: Tuple[ValueItem, ...]
    categories: Tuple[ValueCategory, ...] = ()
    _index: Dict[str, Tuple[ValueItem, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index: Dict[str, List[ValueItem]] = defaultdict(list)
        for item in self.items:
            for keyword in sorted(item.keywords):
                index[keyword].append(item)
        object.__setattr__(self, "_index", {keyword: tuple(items) for keyword, items in index.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ValuesDictionary):
            return NotImplemented
        return set(self.items) == set(other.items) and set(self.categories) == set(other.categories)

    def __hash__(self) -> int:
        return hash((frozenset(self.items), frozenset(self.categories)))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def item(self, name: str) -> ValueItem:
        for candidate in self.items:
            if candidate.name == name:
                return candidate
        raise KeyError(name)

    def items_in(self, category: str) -> List[ValueItem]:
        return [item for item in self.items if item.category.name == category]

    def category_counts(self) -> Dict[str, int]:
        """Number of items per category, in canonical category order"""
        counts = {category.name: 0 for category in self.categories}
        for item in self.items:
            counts[item.category.name] = counts.get(item.category.name, 0) + 1
        return counts

    def keyword_index(self) -> Dict[str, Tuple[ValueItem, ...]]:
        """Map each keyword stem to every item listing it, in dictionary order"""
        return dict(self._index)


def _stem_keyword(raw: str, where: str, problems: List[str], terms: set) -> Optional[str]:
    words = word_tokens(tokenize(raw))
    if len(words) != 1:
        problems.append(f"{where}: keyword {raw!r} must be a single word")
        return None
    terms.add(words[0].surface.lower())
    stemmed = stem(words[0].surface)
    if stem(stemmed) != stemmed:
        # Porter2 is not idempotent for a few words
        logger.warning(f"{where}: keyword {raw!r} has unstable stem {stemmed!r}, skipped")
        return None
    return stemmed


def _item_term(name: str) -> Optional[str]:
    words = word_tokens(tokenize(name))
    if len(words) != 1:
        return None
    stemmed = stem(words[0].surface)
    return stemmed if stem(stemmed) == stemmed else None


def build_dictionary(data: Mapping, source: Optional[str] = None) -> ValuesDictionary:
    """
    Build and validate a ValuesDictionary from parsed JSON

    Args:
        data: {category: {item_name: {"synonyms": [...], "antonyms": [...]}}}
        source: File name used in error messages

    Returns:
        ValuesDictionary

    Raises:
        DictionaryValidationError: listing every problem found
    """
    problems: List[str] = []
    if not isinstance(data, Mapping):
        raise DictionaryValidationError(["dictionary must be a JSON object keyed by category"], path=source)

    categories = {name: ValueCategory(name, description) for name, description in CATEGORY_DESCRIPTIONS.items()}
    items: List[ValueItem] = []
    seen_items = set()

    for category_name, entries in data.items():
        category = categories.get(category_name)
        if category is None:
            problems.append(f"unknown category {category_name!r}")
            continue
        if not isinstance(entries, Mapping):
            problems.append(f"category {category_name!r} must map item names to keyword lists")
            continue

        for item_name, definition in entries.items():
            where = f"{category_name}/{item_name}"
            if _normalize_name(item_name) in EXCLUDED_ITEMS:
                problems.append(f"excluded value item {item_name!r} is not allowed")
                continue
            if _normalize_name(item_name) in seen_items:
                problems.append(f"duplicate value item {item_name!r}")
                continue
            seen_items.add(_normalize_name(item_name))
            definition = definition or {}
            if not isinstance(definition, Mapping):
                problems.append(f"{where}: expected an object with synonyms/antonyms")
                continue

            terms: set = set()
            synonyms = set()
            term = _item_term(item_name)
            if term:
                synonyms.add(term)
            for raw in definition.get("synonyms", []) or []:
                stemmed = _stem_keyword(str(raw), where, problems, terms)
                if stemmed:
                    synonyms.add(stemmed)
            antonyms = set()
            for raw in definition.get("antonyms", []) or []:
                stemmed = _stem_keyword(str(raw), where, problems, terms)
                if stemmed and stemmed not in synonyms:
                    antonyms.add(stemmed)

            if not synonyms and not antonyms:
                problems.append(f"item {item_name!r} has no keywords")
                continue
            items.append(
                ValueItem(item_name, category, frozenset(synonyms), frozenset(antonyms), frozenset(terms))
            )

    counts: Dict[str, int] = defaultdict(int)
    for item in items:
        counts[item.category.name] += 1
    for category_name, expected in EXPECTED_ITEM_COUNTS.items():
        if counts[category_name] != expected:
            problems.append(f"category {category_name!r} has {counts[category_name]} items, expected {expected}")
    if len(items) != EXPECTED_ITEM_TOTAL:
        problems.insert(0, f"dictionary has {len(items)} items, expected {EXPECTED_ITEM_TOTAL}")

    if problems:
        for problem in problems:
            logger.error(f"Dictionary validation: {problem}")
        raise DictionaryValidationError(problems, path=source)

    owners: Dict[str, List[str]] = defaultdict(list)
    for item in items:
        for keyword in item.keywords:
            owners[keyword].append(item.name)
    for keyword in sorted(owners):
        if len(owners[keyword]) > 1:
            logger.warning(f"Keyword {keyword!r} shared by items: {', '.join(owners[keyword])}")

    # canonical order: category circle, then item name
    order = {name: i for i, name in enumerate(CATEGORY_NAMES)}
    items.sort(key=lambda item: (order[item.category.name], item.name))
    return ValuesDictionary(items=tuple(items), categories=tuple(categories.values()))


def load_dictionary(path: PathLike) -> ValuesDictionary:
    """
    Load, stem and validate a values dictionary file

    Args:
        path: UTF-8 JSON dictionary file

    Returns:
        ValuesDictionary with 50 items across 10 categories
    """
    path = Path(path)
    with path.open(encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as e:
            raise DictionaryValidationError([f"invalid JSON: {e.msg} (line {e.lineno})"], path=str(path))

    dictionary = build_dictionary(data, source=str(path))
    keyword_total = sum(len(item.keywords) for item in dictionary)
    logger.info(f"Loaded values dictionary: {len(dictionary)} items, {keyword_total} keywords from {path.name}")
    return dictionary

"""
Corpus-level detection pipeline

Extracts features once per app, runs the detector over every review
(optionally across a process pool) and returns records and a ledger in
input order.
"""

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from loguru import logger
from tqdm import tqdm

from src.corpus.models import AppRecord, Review, ReviewCollection
from src.detector.detector import Detection, ViolationDetector
from src.detector.models import LedgerEntry, Outcome, ViolationRecord
from src.exceptions import DataError
from src.features.extractor import AppFeature, FeatureExtractor, extract_catalogue
from src.sentiment.analyzer import SentimentAnalyzer
from src.sentiment.lexicon import SentimentLexicon
from src.textprep.preprocess import TextPreprocessor
from src.textprep.spelling import FrequencyList
from src.values.dictionary import ValuesDictionary

CHUNK_SIZE = 64


@dataclass(frozen=True)
class PipelineResult:
    records: Tuple[ViolationRecord, ...] = ()
    ledger: Tuple[LedgerEntry, ...] = ()
    features: Dict[str, List[AppFeature]] = field(default_factory=dict)

    def outcome_counts(self) -> Dict[str, int]:
        counts = {outcome.value: 0 for outcome in Outcome}
        for entry in self.ledger:
            counts[entry.outcome.value] += 1
        return counts


def domain_vocabulary(
    dictionary: ValuesDictionary,
    apps: Iterable[AppRecord] = (),
    lexicon: Optional[SentimentLexicon] = None,
) -> FrozenSet[str]:
    """
    Words the spell corrector must treat as known

    Dictionary keywords as written, item names, app names and the sentiment
    lexicon, so the corrector never rewrites the terms the detector or the
    scorer looks for.
    """
    words = set()
    if lexicon is not None:
        words.update(lexicon.valences)
        words.update(lexicon.boosters)
        words.update(lexicon.negations)
    for item in dictionary:
        words.update(item.terms)
        words.update(item.name.lower().replace("-", " ").split())
    for app in apps:
        words.update(app.name.lower().replace("-", " ").split())
    return frozenset(word.strip(".,&") for word in words if word.strip(".,&").isalpha())


def build_detector(
    dictionary: ValuesDictionary,
    freq: FrequencyList,
    stoplist: FrozenSet[str],
    lexicon: SentimentLexicon,
    apps: Iterable[AppRecord] = (),
    p_threshold: float = 0.05,
    positive_threshold: float = 0.05,
    negative_threshold: float = -0.05,
    window: int = 5,
) -> ViolationDetector:
    """Wire preprocessing, sentiment and matching into one detector"""
    vocabulary = freq.extended(domain_vocabulary(dictionary, apps, lexicon))
    return ViolationDetector(
        dictionary,
        TextPreprocessor(vocabulary, stoplist),
        SentimentAnalyzer(lexicon, positive_threshold, negative_threshold),
        p_threshold=p_threshold,
        window=window,
    )


# Per-process state installed by the pool initializer
_worker_detector: Optional[ViolationDetector] = None
_worker_features: Dict[str, List[AppFeature]] = {}


def _init_worker(detector: ViolationDetector, features: Dict[str, List[AppFeature]]) -> None:
    global _worker_detector, _worker_features
    _worker_detector = detector
    _worker_features = features


def _detect_in_worker(review: Review) -> Detection:
    return _worker_detector.evaluate(review, _worker_features.get(review.app_id, ()))


def _resolve_apps(corpus: ReviewCollection, apps: Sequence[AppRecord]) -> None:
    known = {app.app_id for app in apps}
    for review in corpus:
        if review.app_id not in known:
            raise DataError(f"review {review.review_id!r}: app_id {review.app_id!r} not found in app metadata")


def run_pipeline(
    corpus: ReviewCollection,
    apps: Sequence[AppRecord],
    detector: ViolationDetector,
    extractor: Optional[FeatureExtractor] = None,
    workers: int = 1,
    progress: bool = False,
) -> PipelineResult:
    """
    Detect value violations across a corpus

    Args:
        corpus: Filtered reviews
        apps: Metadata for every app referenced by the corpus
        detector: Configured ViolationDetector
        extractor: Feature extractor (bundled patterns when omitted)
        workers: Worker processes; 1 runs in-process
        progress: Show a tqdm progress bar on stderr

    Returns:
        PipelineResult with records and ledger in corpus order
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    _resolve_apps(corpus, apps)

    extractor = extractor or FeatureExtractor(stoplist=detector.preprocessor.stoplist)
    catalogue = extract_catalogue(apps, extractor)

    logger.info(f"Running detection on {len(corpus)} reviews with {workers} worker(s)")
    reviews = list(corpus)
    bar = dict(total=len(reviews), desc="Detecting", unit="review", disable=not progress, file=sys.stderr)

    if workers == 1 or len(reviews) < 2:
        detections = [
            detector.evaluate(review, catalogue.get(review.app_id, ()))
            for review in tqdm(reviews, **bar)
        ]
    else:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(detector, catalogue)
        ) as pool:
            # map() yields results in submission order
            detections = list(tqdm(pool.map(_detect_in_worker, reviews, chunksize=CHUNK_SIZE), **bar))

    records = tuple(d.record for d in detections if d.record is not None)
    ledger = tuple(LedgerEntry(review_id=d.review_id, app_id=d.app_id, outcome=d.outcome) for d in detections)
    result = PipelineResult(records=records, ledger=ledger, features=catalogue)

    counts = result.outcome_counts()
    logger.success(
        f"Detection complete: {counts['violation']} violations, "
        f"{counts['no-violation']} without violation, {counts['degenerate']} degenerate"
    )
    return result


def log_app_overview(corpus: ReviewCollection, apps: Sequence[AppRecord]) -> None:
    """Log the per-app dataset overview (name, category, review count)"""
    counts = corpus.source_counts
    for app in apps:
        logger.info(f"  {app.name:<20} {app.category:<24} {counts.get(app.app_id, 0):>6} reviews")
    logger.info(f"  {'Total':<20} {'':<24} {len(corpus):>6} reviews")


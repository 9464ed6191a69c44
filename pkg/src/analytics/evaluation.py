"""
Truthset evaluation of detection output

The headline evaluation is binary and review-level: a review is predicted
positive when a ViolationRecord exists for it and actually positive when the
truthset lists at least one violated item for it. Per-item multi-label
metrics are computed alongside.
"""

from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.detector.models import ViolationRecord
from src.exceptions import DataError

PathLike = Union[str, Path]


class TruthLabel(BaseModel):
    model_config = ConfigDict(frozen=True)

    review_id: str = Field(min_length=1)
    violated_items: Tuple[str, ...] = ()
    violated_categories: Tuple[str, ...] = ()

    @property
    def is_violation(self) -> bool:
        return bool(self.violated_items)


class EvalMetrics(BaseModel):
    """
    Confusion counts and derived metrics

    A metric with a zero denominator is reported as 0 and its `*_defined`
    flag is False.
    """

    model_config = ConfigDict(frozen=True)

    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0
    precision: float = 0.0
    recall: float = 0.0
    f_measure: float = 0.0
    precision_defined: bool = False
    recall_defined: bool = False
    f_defined: bool = False

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


class ItemMetrics(BaseModel):
    model_config = ConfigDict(frozen=True)

    item: str
    metrics: EvalMetrics


class EvaluationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    review_level: EvalMetrics
    per_item: Tuple[ItemMetrics, ...] = ()


def f_measure(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; 0 when both are 0"""
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def metrics_from_counts(tp: int, fp: int, tn: int, fn: int) -> EvalMetrics:
    """
    Derive precision, recall and F-measure from a confusion matrix

    Args:
        tp: True positives
        fp: False positives
        tn: True negatives
        fn: False negatives

    Returns:
        EvalMetrics with undefined metrics flagged
    """
    precision_defined = tp + fp > 0
    recall_defined = tp + fn > 0
    precision = tp / (tp + fp) if precision_defined else 0.0
    recall = tp / (tp + fn) if recall_defined else 0.0
    f_defined = precision + recall > 0
    return EvalMetrics(
        tp=tp,
        fp=fp,
        tn=tn,
        fn=fn,
        precision=precision,
        recall=recall,
        f_measure=f_measure(precision, recall),
        precision_defined=precision_defined,
        recall_defined=recall_defined,
        f_defined=f_defined,
    )


def load_truthset(path: PathLike) -> List[TruthLabel]:
    """
    Load a truthset JSONL file

    Args:
        path: One {review_id, violated_items, violated_categories} object per line

    Returns:
        Labels in file order
    """
    path = Path(path)
    labels: List[TruthLabel] = []
    seen: Set[str] = set()
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                label = TruthLabel.model_validate_json(line)
            except ValidationError as e:
                error = e.errors()[0]
                where = ".".join(str(part) for part in error.get("loc", ())) or "record"
                raise DataError(f"{where}: {error.get('msg', 'invalid value')}", path=str(path), line=line_no)
            if label.review_id in seen:
                raise DataError(f"duplicate review_id {label.review_id!r}", path=str(path), line=line_no)
            seen.add(label.review_id)
            labels.append(label)
    logger.info(f"Loaded truthset: {len(labels)} labels, {sum(label.is_violation for label in labels)} violations")
    return labels


def _corpus_ids(corpus) -> List[str]:
    if hasattr(corpus, "ids"):
        return list(corpus.ids())
    return list(corpus)


def evaluate(
    records: Iterable[ViolationRecord],
    truthset: Sequence[TruthLabel],
    corpus,
) -> EvalMetrics:
    """
    Binary review-level evaluation

    Reviews of the corpus without a truthset label count as actual negatives.

    Args:
        records: Detection output
        truthset: Manual labels
        corpus: ReviewCollection (or iterable of review ids) defining the
            evaluated reviews

    Returns:
        EvalMetrics whose counts sum to the corpus size
    """
    return evaluate_detailed(records, truthset, corpus).review_level


def evaluate_detailed(
    records: Iterable[ViolationRecord],
    truthset: Sequence[TruthLabel],
    corpus,
) -> EvaluationReport:
    """Review-level metrics plus per-item multi-label metrics"""
    ids = _corpus_ids(corpus)
    universe = set(ids)
    missing = [label.review_id for label in truthset if label.review_id not in universe]
    if missing:
        raise DataError(f"truthset review_id {missing[0]!r} not found in corpus ({len(missing)} missing)")

    predicted: Dict[str, Set[str]] = {}
    for record in records:
        if record.review_id in universe:
            predicted[record.review_id] = set(record.item_names)
    actual: Dict[str, Set[str]] = {label.review_id: set(label.violated_items) for label in truthset}

    tp = fp = tn = fn = 0
    for review_id in ids:
        is_predicted = review_id in predicted
        is_actual = bool(actual.get(review_id))
        if is_predicted and is_actual:
            tp += 1
        elif is_predicted:
            fp += 1
        elif is_actual:
            fn += 1
        else:
            tn += 1
    review_level = metrics_from_counts(tp, fp, tn, fn)

    item_names = sorted(set().union(*predicted.values(), *actual.values()))
    per_item = []
    for item in item_names:
        counts = [0, 0, 0, 0]
        for review_id in ids:
            p = item in predicted.get(review_id, ())
            a = item in actual.get(review_id, ())
            counts[0 if p and a else 1 if p else 3 if a else 2] += 1
        per_item.append(ItemMetrics(item=item, metrics=metrics_from_counts(*counts)))

    logger.info(
        f"Evaluation over {len(ids)} reviews: precision={review_level.precision:.3f}, "
        f"recall={review_level.recall:.3f}, F={review_level.f_measure:.3f}"
    )
    return EvaluationReport(review_level=review_level, per_item=tuple(per_item))


def load_evaluation(path: PathLike) -> Optional[EvaluationReport]:
    """Reload a metrics.json written by emit_report, if present"""
    path = Path(path)
    if not path.exists():
        return None
    return EvaluationReport.model_validate_json(path.read_text(encoding="utf-8"))

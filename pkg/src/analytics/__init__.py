"""
Corpus-level aggregation, truthset evaluation and report rendering
"""

from src.analytics.aggregation import (
    CategoryStats,
    FeatureValueRow,
    FeatureValueTable,
    ItemFrequency,
    LikesStats,
    aggregate_by_category,
    aggregate_likes,
    associate_features,
)
from src.analytics.evaluation import (
    EvalMetrics,
    EvaluationReport,
    ItemMetrics,
    TruthLabel,
    evaluate,
    evaluate_detailed,
    f_measure,
    load_evaluation,
    load_truthset,
    metrics_from_counts,
)
from src.analytics.report import FORMATS, emit_report

__all__ = [
    "FORMATS",
    "CategoryStats",
    "EvalMetrics",
    "EvaluationReport",
    "FeatureValueRow",
    "FeatureValueTable",
    "ItemFrequency",
    "ItemMetrics",
    "LikesStats",
    "TruthLabel",
    "aggregate_by_category",
    "aggregate_likes",
    "associate_features",
    "emit_report",
    "evaluate",
    "evaluate_detailed",
    "f_measure",
    "load_evaluation",
    "load_truthset",
    "metrics_from_counts",
]

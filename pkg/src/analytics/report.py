"""
Report rendering: JSON, CSV or Markdown files in an output directory

Every file is written with UTF-8 and LF line endings and a fixed column
order, so identical inputs give byte-identical outputs.
"""

import json
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Union

import pandas as pd
from loguru import logger

from src.analytics.aggregation import CategoryStats, FeatureValueTable, LikesStats
from src.analytics.evaluation import EvalMetrics, EvaluationReport

FORMATS = ("json", "csv", "md")

CATEGORY_SUMMARY = "category_summary"
ITEM_FREQUENCIES = "item_frequencies"
LIKES_SUMMARY = "likes_summary"
FEATURE_VALUE_TABLE = "feature_value_table"
METRICS = "metrics"
PLOT_DATA = "category_percentages.csv"

CATEGORY_COLUMNS = ["category", "review_count", "item_count", "percentage", "average_per_app"]
ITEM_COLUMNS = ["rank", "category", "item", "frequency"]
LIKES_COLUMNS = ["category", "likes"]
FEATURE_COLUMNS = ["feature", "app_id", "items", "support"]
METRIC_COLUMNS = [
    "scope",
    "item",
    "tp",
    "fp",
    "tn",
    "fn",
    "precision",
    "recall",
    "f_measure",
    "precision_defined",
    "recall_defined",
    "f_defined",
]
PLOT_COLUMNS = ["category", "percentage"]

# Column abbreviations of the per-app matrix
CATEGORY_ABBREVIATIONS = {
    "Achievement": "Ach",
    "Benevolence": "Ben",
    "Conformity": "Conf",
    "Hedonism": "Hed",
    "Power": "Pow",
    "Security": "Sec",
    "Self-direction": "SelfDir",
    "Stimulation": "Stim",
    "Tradition": "Trad",
    "Universalism": "Univ",
}

Rows = List[Dict[str, object]]


def _number(value: float, digits: int = 1) -> str:
    """Fixed-point text without trailing zeros, e.g. 172.33 -> 172.3 and 10.0 -> 10"""
    text = f"{value:.{digits}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _category_rows(stats: CategoryStats) -> Rows:
    return [
        {
            "category": category,
            "review_count": count,
            "item_count": stats.item_category_counts.get(category, 0),
            "percentage": f"{stats.percentages[category]:.2f}",
            "average_per_app": _number(stats.averages.get(category, 0.0)),
        }
        for category, count in stats.category_counts.items()
    ]


def _item_rows(stats: CategoryStats) -> Rows:
    return [
        {"rank": rank, "category": row.category, "item": row.item, "frequency": row.frequency}
        for rank, row in enumerate(stats.ranked_items(), start=1)
    ]


def _likes_rows(likes: LikesStats) -> Rows:
    return [{"category": category, "likes": total} for category, total in likes.ranking()]


def _feature_rows(table: FeatureValueTable) -> Rows:
    return [
        {"feature": row.feature, "app_id": row.app_id, "items": "; ".join(row.items), "support": row.support}
        for row in table
    ]


def _metric_row(scope: str, item: str, metrics: EvalMetrics) -> Dict[str, object]:
    return {
        "scope": scope,
        "item": item,
        "tp": metrics.tp,
        "fp": metrics.fp,
        "tn": metrics.tn,
        "fn": metrics.fn,
        "precision": f"{metrics.precision:.4f}",
        "recall": f"{metrics.recall:.4f}",
        "f_measure": f"{metrics.f_measure:.4f}",
        "precision_defined": str(metrics.precision_defined).lower(),
        "recall_defined": str(metrics.recall_defined).lower(),
        "f_defined": str(metrics.f_defined).lower(),
    }


def _metric_rows(report: EvaluationReport) -> Rows:
    rows = [_metric_row("review", "", report.review_level)]
    rows.extend(_metric_row("item", row.item, row.metrics) for row in report.per_item)
    return rows


def _write_text(path: Path, text: str) -> Path:
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    return path


def _write_csv(path: Path, rows: Rows, columns: Sequence[str]) -> Path:
    frame = pd.DataFrame(rows, columns=list(columns))
    frame.to_csv(path, index=False, encoding="utf-8", lineterminator="\n")
    return path


def _write_json(path: Path, payload) -> Path:
    return _write_text(path, json.dumps(payload, indent=2, ensure_ascii=False) + "\n")


def _md_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = ["| " + " | ".join(headers) + " |", "|" + "|".join("---" for _ in headers) + "|"]
    lines.extend("| " + " | ".join(str(cell) for cell in row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def _category_markdown(stats: CategoryStats, app_names: Mapping[str, str]) -> str:
    matrix_categories = sorted(stats.category_counts)
    headers = ["App"] + [CATEGORY_ABBREVIATIONS.get(c, c) for c in matrix_categories] + ["Total"]
    rows: List[List[object]] = []
    for app_id, counts in stats.per_app.items():
        rows.append(
            [app_names.get(app_id, app_id)]
            + [counts.get(c, 0) for c in matrix_categories]
            + [stats.per_app_totals[app_id]]
        )
    rows.append(
        ["Average"] + [_number(stats.averages.get(c, 0.0)) for c in matrix_categories] + [_number(stats.average_total)]
    )

    summary = [
        [
            category,
            count,
            stats.item_category_counts.get(category, 0),
            f"{stats.percentages[category]:.2f}%",
        ]
        for category, count in stats.category_counts.items()
    ]
    rate = 100 * stats.violation_rate
    parts = [
        "# Values violations by category\n",
        f"{stats.violating_reviews} of {stats.corpus_size} reviews ({rate:.1f}%) violate at least one value.\n",
        "## Per app\n",
        _md_table(headers, rows),
        "## Summary\n",
        _md_table(["Category", "Reviews", "Item violations", "Share"], summary),
    ]
    if stats.empty_total:
        parts.append("\nNo violations were detected; percentages are reported as 0.\n")
    return "\n".join(parts)


def _items_markdown(stats: CategoryStats) -> str:
    rows = [[row["rank"], row["category"], row["item"], row["frequency"]] for row in _item_rows(stats)]
    return "# Value items\n\n" + _md_table(["Rank", "Category", "Item", "f"], rows)


def _likes_markdown(likes: LikesStats) -> str:
    rows = [[category, total] for category, total in likes.ranking()]
    return "# Likes per violated category\n\n" + _md_table(["Category", "Likes"], rows)


def _features_markdown(table: FeatureValueTable, app_names: Mapping[str, str]) -> str:
    rows = [
        [row.feature.capitalize(), app_names.get(row.app_id, row.app_id), ", ".join(row.items), row.support]
        for row in table
    ]
    return "# App features and related value violations\n\n" + _md_table(
        ["Feature", "App", "Violated values", "Reviews"], rows
    )


def _metrics_markdown(report: EvaluationReport) -> str:
    headers = ["Scope", "Item", "TP", "FP", "TN", "FN", "Precision", "Recall", "F-measure"]
    rows = []
    for row in _metric_rows(report):
        cells = [row[name] for name in METRIC_COLUMNS[:9]]
        for name in ("precision", "recall", "f_measure"):
            flag = "f_defined" if name == "f_measure" else f"{name}_defined"
            if row[flag] == "false":
                cells[METRIC_COLUMNS.index(name)] = "undefined"
        rows.append(cells)
    return "# Evaluation\n\n" + _md_table(headers, rows)


def emit_report(
    stats: CategoryStats,
    likes: LikesStats,
    table: FeatureValueTable,
    metrics: Optional[Union[EvalMetrics, EvaluationReport]],
    format: str,
    out_dir: Union[str, Path],
    app_names: Optional[Mapping[str, str]] = None,
) -> List[Path]:
    """
    Write report files

    Args:
        stats: Category aggregates
        likes: Likes per category
        table: Feature / value-violation table
        metrics: Evaluation results; the metrics file is skipped when None
        format: "json", "csv" or "md"
        out_dir: Output directory (created if missing)
        app_names: app_id -> display name for Markdown tables

    Returns:
        Paths written, the plot-data CSV last
    """
    if format not in FORMATS:
        raise ValueError(f"unknown report format {format!r} (expected one of {', '.join(FORMATS)})")
    if isinstance(metrics, EvalMetrics):
        metrics = EvaluationReport(review_level=metrics)
    app_names = app_names or {}

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: List[Path] = []

    def target(name: str) -> Path:
        return out_dir / f"{name}.{format}"

    if format == "csv":
        written.append(_write_csv(target(CATEGORY_SUMMARY), _category_rows(stats), CATEGORY_COLUMNS))
        written.append(_write_csv(target(ITEM_FREQUENCIES), _item_rows(stats), ITEM_COLUMNS))
        written.append(_write_csv(target(LIKES_SUMMARY), _likes_rows(likes), LIKES_COLUMNS))
        written.append(_write_csv(target(FEATURE_VALUE_TABLE), _feature_rows(table), FEATURE_COLUMNS))
        if metrics is not None:
            written.append(_write_csv(target(METRICS), _metric_rows(metrics), METRIC_COLUMNS))
    elif format == "json":
        written.append(_write_json(target(CATEGORY_SUMMARY), stats.model_dump(mode="json")))
        written.append(_write_json(target(ITEM_FREQUENCIES), _item_rows(stats)))
        written.append(_write_json(target(LIKES_SUMMARY), likes.model_dump(mode="json")))
        written.append(_write_json(target(FEATURE_VALUE_TABLE), table.model_dump(mode="json")))
        if metrics is not None:
            written.append(_write_json(target(METRICS), metrics.model_dump(mode="json")))
    else:
        written.append(_write_text(target(CATEGORY_SUMMARY), _category_markdown(stats, app_names)))
        written.append(_write_text(target(ITEM_FREQUENCIES), _items_markdown(stats)))
        written.append(_write_text(target(LIKES_SUMMARY), _likes_markdown(likes)))
        written.append(_write_text(target(FEATURE_VALUE_TABLE), _features_markdown(table, app_names)))
        if metrics is not None:
            written.append(_write_text(target(METRICS), _metrics_markdown(metrics)))

    plot_rows = [{"category": c, "percentage": f"{p:.2f}"} for c, p in stats.percentages.items()]
    written.append(_write_csv(out_dir / PLOT_DATA, plot_rows, PLOT_COLUMNS))

    logger.success(f"Wrote {len(written)} {format} report files to {out_dir}")
    return written

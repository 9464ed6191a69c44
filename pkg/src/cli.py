"""
Command-line interface for review-values

Usage:
   python -m src.cli analyze --reviews reviews.jsonl --apps apps.jsonl --out out/
   python -m src.cli evaluate --truthset truthset.jsonl --out out/
   python -m src.cli extract-features --apps apps.jsonl --out out/
   python -m src.cli dict-validate --dict values.json
   python -m src.cli report --out out/ --format md

Exit codes: 0 success, 1 usage error, 2 data/validation/config error,
3 I/O error. Logs go to stderr, data to files (and stdout for
dict-validate).
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Set

from loguru import logger

from src.analytics import (
    aggregate_by_category,
    aggregate_likes,
    associate_features,
    emit_report,
    evaluate_detailed,
    load_evaluation,
    load_truthset,
)
from src.analytics.evaluation import EvaluationReport
from src.config import RunConfig, describe, load_run_config, log_level
from src.corpus import AppRecord, load_app_metadata, load_reviews, partition_informative
from src.detector import (
    FEATURES_FILE,
    FILTERED_FILE,
    LEDGER_FILE,
    VIOLATIONS_FILE,
    build_detector,
    log_app_overview,
    read_ledger,
    read_violations,
    run_pipeline,
    write_features,
    write_filtered,
    write_ledger,
    write_violations,
)
from src.detector.models import LedgerEntry, ViolationRecord
from src.exceptions import ConfigError, DataError, ReviewValuesError
from src.features import FeatureExtractor, extract_catalogue, load_allowlist, load_patterns, load_pos_lexicon
from src.sentiment import load_lexicon
from src.textprep import load_frequency_list, load_stoplist
from src.values import load_dictionary

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3

EVALUATION_FILE = "evaluation.json"


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="JSON file with run settings")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--quiet", action="store_true", help="No progress bar")


def _add_assets(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dict", dest="dictionary", type=Path, help="Values dictionary JSON")
    parser.add_argument("--lexicon", type=Path, help="Sentiment lexicon TSV")
    parser.add_argument("--boosters", type=Path, help="Booster words TSV")
    parser.add_argument("--negations", type=Path, help="Negation cues, one per line")
    parser.add_argument("--stoplist", type=Path, help="Stopwords, one per line")
    parser.add_argument("--frequencies", type=Path, help="Word frequency list TSV")
    parser.add_argument("--pos-lexicon", dest="pos_lexicon", type=Path, help="POS tag lexicon TSV")
    parser.add_argument("--patterns", type=Path, help="Feature POS patterns file")
    parser.add_argument("--allowlist", type=Path, help="Verified feature phrases, one per line")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="review-values", description="Detect human-values violations in app reviews")
    subparsers = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    subparsers.required = True

    analyze = subparsers.add_parser("analyze", help="Run detection and write reports")
    _add_common(analyze)
    _add_assets(analyze)
    analyze.add_argument("--reviews", type=Path, help="Review export (JSONL or CSV)")
    analyze.add_argument("--review-format", dest="review_format", choices=["jsonl", "csv"])
    analyze.add_argument("--apps", type=Path, help="App metadata JSONL")
    analyze.add_argument("--out", type=Path, help="Output directory")
    analyze.add_argument("--format", default="csv", choices=["json", "csv", "md"])
    analyze.add_argument("--p-threshold", dest="p_threshold", type=float)
    analyze.add_argument("--positive-threshold", dest="positive_threshold", type=float)
    analyze.add_argument("--negative-threshold", dest="negative_threshold", type=float)
    analyze.add_argument("--min-tokens", dest="min_tokens", type=int)
    analyze.add_argument("--window", type=int)
    analyze.add_argument("--workers", type=int)

    evaluate = subparsers.add_parser("evaluate", help="Score a previous analyze run against a truthset")
    _add_common(evaluate)
    evaluate.add_argument("--truthset", type=Path, help="Truthset JSONL")
    evaluate.add_argument("--out", type=Path, help="Output directory of a previous analyze run")
    evaluate.add_argument("--apps", type=Path, help="App metadata JSONL (for names in reports)")
    evaluate.add_argument("--format", default="csv", choices=["json", "csv", "md"])

    extract = subparsers.add_parser("extract-features", help="Extract app features from descriptions")
    _add_common(extract)
    _add_assets(extract)
    extract.add_argument("--apps", type=Path, help="App metadata JSONL")
    extract.add_argument("--out", type=Path, help="Output directory")

    validate = subparsers.add_parser("dict-validate", help="Validate a values dictionary")
    _add_common(validate)
    validate.add_argument("--dict", dest="dictionary", type=Path, help="Values dictionary JSON")

    report = subparsers.add_parser("report", help="Re-render reports from a previous analyze run")
    _add_common(report)
    report.add_argument("--out", type=Path, help="Output directory of a previous analyze run")
    report.add_argument("--apps", type=Path, help="App metadata JSONL (for names in reports)")
    report.add_argument("--truthset", type=Path, help="Recompute metrics from this truthset")
    report.add_argument("--format", default="md", choices=["json", "csv", "md"])

    return parser


CONFIG_KEYS = (
    "reviews",
    "review_format",
    "apps",
    "truthset",
    "out",
    "dictionary",
    "lexicon",
    "boosters",
    "negations",
    "stoplist",
    "frequencies",
    "pos_lexicon",
    "patterns",
    "allowlist",
    "p_threshold",
    "positive_threshold",
    "negative_threshold",
    "min_tokens",
    "window",
    "workers",
)


def _configure_logging(args: argparse.Namespace) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if args.verbose else log_level())


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    overrides = {key: getattr(args, key) for key in CONFIG_KEYS if hasattr(args, key)}
    return load_run_config(args.config, overrides)


def _optional_asset(path: Path, label: str) -> Optional[Path]:
    if path.exists():
        return path
    logger.warning(f"{label} file {path} not found, falling back to scoring without {label}")
    return None


def _load_apps(config: RunConfig) -> List[AppRecord]:
    return load_app_metadata(config.apps) if config.apps else []


def _extractor(config: RunConfig, stoplist) -> FeatureExtractor:
    allowlist = load_allowlist(config.allowlist) if config.allowlist else None
    return FeatureExtractor(
        patterns=load_patterns(config.patterns),
        pos_lexicon=load_pos_lexicon(config.pos_lexicon),
        stoplist=stoplist,
        allowlist=allowlist,
    )


def _write_reports(
    records: Sequence[ViolationRecord],
    ledger: Sequence[LedgerEntry],
    apps: Sequence[AppRecord],
    evaluation: Optional[EvaluationReport],
    format: str,
    out: Path,
) -> None:
    app_order = [app.app_id for app in apps] if apps else None
    stats = aggregate_by_category(records, corpus_size=len(ledger), apps=app_order)
    emit_report(
        stats,
        aggregate_likes(records),
        associate_features(records),
        evaluation,
        format,
        out,
        app_names={app.app_id: app.name for app in apps},
    )


def cmd_analyze(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    config.require("reviews", "apps", "dictionary", "lexicon", "stoplist", "frequencies", "pos_lexicon", "patterns")
    settings = ("p_threshold", "positive_threshold", "negative_threshold", "min_tokens", "window", "workers")
    logger.info(f"Analyze: {describe(config, settings)}")

    dictionary = load_dictionary(config.dictionary)
    lexicon = load_lexicon(
        config.lexicon,
        _optional_asset(config.boosters, "booster words"),
        _optional_asset(config.negations, "negation cues"),
    )
    stoplist = load_stoplist(config.stoplist)
    freq = load_frequency_list(config.frequencies)
    apps = _load_apps(config)

    corpus = load_reviews(config.reviews, config.review_format)
    log_app_overview(corpus, apps)
    corpus, filtered = partition_informative(corpus, config.min_tokens)

    detector = build_detector(
        dictionary,
        freq,
        stoplist,
        lexicon,
        apps=apps,
        p_threshold=config.p_threshold,
        positive_threshold=config.positive_threshold,
        negative_threshold=config.negative_threshold,
        window=config.window,
    )
    result = run_pipeline(
        corpus,
        apps,
        detector,
        extractor=_extractor(config, stoplist),
        workers=config.workers,
        progress=not args.quiet and sys.stderr.isatty(),
    )

    out = config.out
    write_violations(result.records, out / VIOLATIONS_FILE)
    write_ledger(result.ledger, out / LEDGER_FILE)
    write_filtered(filtered, out / FILTERED_FILE)
    write_features(result.features, out / FEATURES_FILE)
    _write_reports(result.records, result.ledger, apps, None, args.format, out)
    logger.success(f"Analysis written to {out}")
    return EXIT_OK


def _load_run_outputs(out: Path):
    violations, ledger = out / VIOLATIONS_FILE, out / LEDGER_FILE
    for path in (violations, ledger):
        if not path.exists():
            raise ConfigError(f"{path} not found; run analyze first")
    return read_violations(violations), read_ledger(ledger)


def _load_filtered_ids(out: Path) -> Set[str]:
    path = out / FILTERED_FILE
    if not path.exists():
        logger.warning(f"{path} not found; assuming analyze filtered no reviews")
        return set()
    return {entry.review_id for entry in read_ledger(path)}


def _evaluate(records, ledger, truthset_path: Path, filtered: Set[str]) -> EvaluationReport:
    truthset = load_truthset(truthset_path)
    processed = {entry.review_id for entry in ledger}
    accounted = processed | filtered
    unknown = [label.review_id for label in truthset if label.review_id not in accounted]
    if unknown:
        shown = ", ".join(repr(review_id) for review_id in unknown[:5])
        raise DataError(
            f"{len(unknown)} truthset review ids were neither analyzed nor filtered (first: {shown})",
            path=str(truthset_path),
        )
    kept = [label for label in truthset if label.review_id in processed]
    if len(kept) < len(truthset):
        logger.info(f"Skipping {len(truthset) - len(kept)} truthset reviews removed by the informativeness filter")
    labelled = {label.review_id for label in kept}
    # only the labelled reviews are evaluated
    reviewed = [entry.review_id for entry in ledger if entry.review_id in labelled]
    return evaluate_detailed(records, kept, reviewed)


def cmd_evaluate(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    config.require("truthset")
    records, ledger = _load_run_outputs(config.out)
    evaluation = _evaluate(records, ledger, config.truthset, _load_filtered_ids(config.out))

    path = config.out / EVALUATION_FILE
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(json.dumps(evaluation.model_dump(mode="json"), indent=2) + "\n")
    _write_reports(records, ledger, _load_apps(config), evaluation, args.format, config.out)

    metrics = evaluation.review_level
    logger.success(
        f"Precision {metrics.precision:.2f}, recall {metrics.recall:.2f}, F-measure {metrics.f_measure:.2f}"
    )
    return EXIT_OK


def cmd_extract_features(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    config.require("apps", "stoplist", "pos_lexicon", "patterns")
    apps = _load_apps(config)
    catalogue = extract_catalogue(apps, _extractor(config, load_stoplist(config.stoplist)))
    path = write_features(catalogue, config.out / FEATURES_FILE)
    total = sum(len(features) for features in catalogue.values())
    logger.success(f"Wrote {total} features for {len(catalogue)} apps to {path}")
    return EXIT_OK


def cmd_dict_validate(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    config.require("dictionary")
    dictionary = load_dictionary(config.dictionary)
    counts: Dict[str, int] = dictionary.category_counts()
    width = max(len(name) for name in counts)
    for category, count in counts.items():
        print(f"{category:<{width}}  {count}")
    print(f"{'Total':<{width}}  {len(dictionary)}")
    logger.success(f"{config.dictionary} is valid")
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    records, ledger = _load_run_outputs(config.out)
    if config.truthset:
        config.require("truthset")
        evaluation = _evaluate(records, ledger, config.truthset, _load_filtered_ids(config.out))
    else:
        evaluation = load_evaluation(config.out / EVALUATION_FILE)
    _write_reports(records, ledger, _load_apps(config), evaluation, args.format, config.out)
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "evaluate": cmd_evaluate,
    "extract-features": cmd_extract_features,
    "dict-validate": cmd_dict_validate,
    "report": cmd_report,
}


def _fail(code: int, message: str) -> int:
    # one line, whatever the message contains
    print(f"error: {' '.join(str(message).split())}", file=sys.stderr)
    return code


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one subcommand

    Args:
        argv: Arguments without the program name (sys.argv[1:] when omitted)

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as e:
        return _fail(EXIT_USAGE, str(e))

    _configure_logging(args)
    try:
        return COMMANDS[args.command](args)
    except (ReviewValuesError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        return _fail(EXIT_DATA, str(e))
    except OSError as e:
        logger.error(f"{args.command} failed: {e}")
        return _fail(EXIT_IO, str(e))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

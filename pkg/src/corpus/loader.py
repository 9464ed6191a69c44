"""
Review and app metadata ingestion from exported JSONL/CSV files
"""

import json
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

import pandas as pd
from loguru import logger
from pydantic import ValidationError

from src.corpus.models import REQUIRED_REVIEW_FIELDS, REVIEW_FIELDS, AppRecord, Review, ReviewCollection
from src.exceptions import DataError
from src.textprep.tokenizer import count_words

FORMATS = ("jsonl", "csv")
DEFAULT_MIN_TOKENS = 3

PathLike = Union[str, Path]


def _infer_format(path: Path, fmt: Optional[str]) -> str:
    if fmt:
        fmt = fmt.lower()
    else:
        suffix = path.suffix.lower().lstrip(".")
        fmt = "jsonl" if suffix in ("jsonl", "ndjson", "json") else suffix
    if fmt not in FORMATS:
        raise DataError(f"unsupported review format {fmt!r} (expected one of {', '.join(FORMATS)})", path=str(path))
    return fmt


def _first_error(exc: ValidationError) -> str:
    error = exc.errors()[0]
    where = ".".join(str(part) for part in error.get("loc", ())) or "record"
    return f"{where}: {error.get('msg', 'invalid value')}"


def _iter_jsonl(path: Path) -> Iterator[Tuple[int, Dict[str, Any]]]:
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise DataError(f"invalid JSON: {e.msg}", path=str(path), line=line_no)
            if not isinstance(record, dict):
                raise DataError("expected a JSON object", path=str(path), line=line_no)
            yield line_no, record


def _iter_csv(path: Path) -> Iterator[Tuple[int, Dict[str, Any]]]:
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError:
        logger.warning(f"Empty CSV file: {path}")
        return
    unknown = [column for column in frame.columns if column not in REVIEW_FIELDS]
    if unknown:
        raise DataError(f"unexpected CSV columns: {', '.join(unknown)}", path=str(path), line=1)
    for index, row in enumerate(frame.to_dict(orient="records")):
        # header occupies line 1
        yield index + 2, row


def _to_review(record: Dict[str, Any], path: Path, line_no: int) -> Review:
    for name in REQUIRED_REVIEW_FIELDS:
        if name not in record or record[name] is None:
            raise DataError(f"missing required field {name!r}", path=str(path), line=line_no)
    record = dict(record)
    for name in ("rating", "likes"):
        value = record.get(name)
        if isinstance(value, str):
            value = value.strip()
            if value == "" and name == "likes":
                record.pop(name)
                continue
            try:
                record[name] = int(value)
            except ValueError:
                raise DataError(f"{name} is not an integer: {value!r}", path=str(path), line=line_no)
    try:
        return Review.model_validate(record)
    except ValidationError as e:
        raise DataError(_first_error(e), path=str(path), line=line_no)


def load_reviews(path: PathLike, format: Optional[str] = None) -> ReviewCollection:
    """
    Load a review export

    Args:
        path: JSONL or CSV file
        format: "jsonl" or "csv"; inferred from the file suffix when omitted

    Returns:
        ReviewCollection in file order
    """
    path = Path(path)
    fmt = _infer_format(path, format)
    logger.info(f"Loading reviews: {path} ({fmt})")

    rows = _iter_jsonl(path) if fmt == "jsonl" else _iter_csv(path)
    reviews: List[Review] = []
    first_line: Dict[str, int] = {}
    for line_no, record in rows:
        review = _to_review(record, path, line_no)
        if review.review_id in first_line:
            raise DataError(
                f"duplicate review_id {review.review_id!r} (first seen on line {first_line[review.review_id]})",
                path=str(path),
                line=line_no,
            )
        first_line[review.review_id] = line_no
        reviews.append(review)

    collection = ReviewCollection(reviews=tuple(reviews))
    logger.info(f"Loaded {collection.summary()}")
    return collection


def write_reviews(collection: ReviewCollection, path: PathLike, format: Optional[str] = None) -> Path:
    """
    Serialize a collection in the same schema load_reviews reads

    Args:
        collection: Reviews to write
        path: Output file
        format: "jsonl" or "csv"; inferred from the suffix when omitted

    Returns:
        Path written
    """
    path = Path(path)
    fmt = _infer_format(path, format)
    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "jsonl":
        with path.open("w", encoding="utf-8", newline="\n") as handle:
            for review in collection:
                handle.write(json.dumps(review.to_dict(), ensure_ascii=False) + "\n")
    else:
        frame = pd.DataFrame(
            [review.model_dump() for review in collection],
            columns=list(REVIEW_FIELDS),
        )
        frame["date"] = frame["date"].fillna("")
        frame.to_csv(path, index=False, encoding="utf-8", lineterminator="\n")
    logger.debug(f"Wrote {len(collection)} reviews to {path}")
    return path


def partition_informative(
    collection: ReviewCollection, min_tokens: int = DEFAULT_MIN_TOKENS
) -> Tuple[ReviewCollection, ReviewCollection]:
    """
    Split reviews into informative ones and the ones the filter discards

    Args:
        collection: Input reviews
        min_tokens: Minimum number of word tokens to keep a review

    Returns:
        (kept, discarded), each in input order
    """
    if min_tokens < 1:
        raise ValueError(f"min_tokens must be >= 1, got {min_tokens}")

    kept, discarded = [], []
    for review in collection:
        (kept if count_words(review.text) >= min_tokens else discarded).append(review)
    logger.info(
        f"Informativeness filter (min_tokens={min_tokens}): "
        f"{len(kept)} kept, {len(discarded)} discarded"
    )
    return ReviewCollection(reviews=tuple(kept)), ReviewCollection(reviews=tuple(discarded))


def filter_informative(collection: ReviewCollection, min_tokens: int = DEFAULT_MIN_TOKENS) -> ReviewCollection:
    """
    Drop non-informative reviews (fewer than min_tokens word tokens)

    Args:
        collection: Input reviews
        min_tokens: Minimum number of word tokens to keep a review

    Returns:
        Reviews that pass, in input order
    """
    return partition_informative(collection, min_tokens)[0]


def load_app_metadata(path: PathLike) -> List[AppRecord]:
    """
    Load app metadata JSONL, one app per line

    Args:
        path: JSONL file with app_id, name, category, description

    Returns:
        List of AppRecord in file order
    """
    path = Path(path)
    apps: List[AppRecord] = []
    seen = set()
    for line_no, record in _iter_jsonl(path):
        try:
            app = AppRecord.model_validate(record)
        except ValidationError as e:
            raise DataError(_first_error(e), path=str(path), line=line_no)
        if app.app_id in seen:
            raise DataError(f"duplicate app_id {app.app_id!r}", path=str(path), line=line_no)
        seen.add(app.app_id)
        apps.append(app)
    logger.info(f"Loaded metadata for {len(apps)} apps from {path}")
    return apps

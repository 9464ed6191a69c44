"""
violations.jsonl and ledger.jsonl serialization
"""

import json
from pathlib import Path
from typing import Iterable, List, Type, TypeVar, Union

from loguru import logger
from pydantic import BaseModel, ValidationError

from src.detector.models import LedgerEntry, Outcome, ViolationRecord
from src.exceptions import DataError

VIOLATIONS_FILE = "violations.jsonl"
LEDGER_FILE = "ledger.jsonl"
FEATURES_FILE = "features.jsonl"
FILTERED_FILE = "filtered.jsonl"

PathLike = Union[str, Path]
Model = TypeVar("Model", bound=BaseModel)


def _write_jsonl(rows: Iterable[dict], path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        for row in rows:
            handle.write(json.dumps(row, ensure_ascii=False) + "\n")
    return path


def _read_jsonl(path: PathLike, model: Type[Model]) -> List[Model]:
    path = Path(path)
    rows: List[Model] = []
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                rows.append(model.model_validate_json(line))
            except ValidationError as e:
                error = e.errors()[0]
                where = ".".join(str(part) for part in error.get("loc", ())) or "record"
                raise DataError(f"{where}: {error.get('msg', 'invalid value')}", path=str(path), line=line_no)
    return rows


def write_violations(records: Iterable[ViolationRecord], path: PathLike) -> Path:
    """Write one ViolationRecord per line"""
    path = _write_jsonl((record.model_dump(mode="json") for record in records), path)
    logger.debug(f"Wrote violations to {path}")
    return path


def read_violations(path: PathLike) -> List[ViolationRecord]:
    """Reload a violations.jsonl written by write_violations"""
    records = _read_jsonl(path, ViolationRecord)
    logger.info(f"Loaded {len(records)} violation records from {path}")
    return records


def write_ledger(ledger: Iterable[LedgerEntry], path: PathLike) -> Path:
    return _write_jsonl((entry.model_dump(mode="json") for entry in ledger), path)


def read_ledger(path: PathLike) -> List[LedgerEntry]:
    return _read_jsonl(path, LedgerEntry)


def write_filtered(reviews: Iterable, path: PathLike) -> Path:
    """Record the reviews dropped by the informativeness filter as ledger entries"""
    return write_ledger(
        (LedgerEntry(review_id=review.review_id, app_id=review.app_id, outcome=Outcome.FILTERED) for review in reviews),
        path,
    )


def write_features(catalogue: dict, path: PathLike) -> Path:
    """Write the per-app feature catalogue, apps in catalogue order"""
    return _write_jsonl(
        (feature.to_dict() for features in catalogue.values() for feature in features),
        path,
    )

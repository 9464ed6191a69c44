"""
Values-violation detection over review corpora
"""

from src.detector.detector import DEFAULT_P_THRESHOLD, Detection, ViolationDetector
from src.detector.io import (
    FEATURES_FILE,
    FILTERED_FILE,
    LEDGER_FILE,
    VIOLATIONS_FILE,
    read_ledger,
    read_violations,
    write_features,
    write_filtered,
    write_ledger,
    write_violations,
)
from src.detector.models import LedgerEntry, Outcome, ViolatedItem, ViolationRecord
from src.detector.pipeline import PipelineResult, build_detector, domain_vocabulary, log_app_overview, run_pipeline

__all__ = [
    "DEFAULT_P_THRESHOLD",
    "FEATURES_FILE",
    "FILTERED_FILE",
    "LEDGER_FILE",
    "VIOLATIONS_FILE",
    "Detection",
    "LedgerEntry",
    "Outcome",
    "PipelineResult",
    "ViolatedItem",
    "ViolationDetector",
    "ViolationRecord",
    "build_detector",
    "domain_vocabulary",
    "log_app_overview",
    "read_ledger",
    "read_violations",
    "run_pipeline",
    "write_features",
    "write_filtered",
    "write_ledger",
    "write_violations",
]

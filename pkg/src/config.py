"""
Run configuration for review-values

Defaults come from the environment (a .env file is honoured), a JSON config
file may override them, and explicit CLI flags override both.
"""

import json
import os
from pathlib import Path
from typing import Any, Dict, Iterable, Optional

from dotenv import load_dotenv
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.exceptions import ConfigError

load_dotenv()

BUNDLED_ASSET_DIR = Path(__file__).resolve().parent / "resources"

ASSET_FILES: Dict[str, str] = {
    "dictionary": "values_dictionary.json",
    "lexicon": "sentiment_lexicon.tsv",
    "boosters": "booster_words.tsv",
    "negations": "negations.txt",
    "stoplist": "stopwords.txt",
    "frequencies": "word_frequencies.tsv",
    "pos_lexicon": "pos_lexicon.tsv",
    "patterns": "feature_patterns.txt",
}


def asset_dir() -> Path:
    return Path(os.getenv("REVIEW_VALUES_ASSET_DIR") or BUNDLED_ASSET_DIR)


def default_workers() -> int:
    raw = os.getenv("REVIEW_VALUES_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        logger.warning(f"Ignoring non-integer REVIEW_VALUES_WORKERS={raw!r}")
        return 1


def log_level() -> str:
    return os.getenv("LOG_LEVEL", "INFO").upper()


def asset_path(name: str, directory: Optional[Path] = None) -> Path:
    """
    Location of a bundled asset

    Args:
        name: Asset key from ASSET_FILES
        directory: Asset directory (REVIEW_VALUES_ASSET_DIR or the bundled one when omitted)

    Returns:
        Path to the asset file
    """
    if name not in ASSET_FILES:
        raise KeyError(f"unknown asset {name!r}")
    return Path(directory or asset_dir()) / ASSET_FILES[name]


class RunConfig(BaseModel):
    """
    Paths and thresholds for one CLI run
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    reviews: Optional[Path] = None
    review_format: Optional[str] = None
    apps: Optional[Path] = None
    truthset: Optional[Path] = None
    out: Path = Path("out")

    dictionary: Path = Field(default_factory=lambda: asset_path("dictionary"))
    lexicon: Path = Field(default_factory=lambda: asset_path("lexicon"))
    boosters: Path = Field(default_factory=lambda: asset_path("boosters"))
    negations: Path = Field(default_factory=lambda: asset_path("negations"))
    stoplist: Path = Field(default_factory=lambda: asset_path("stoplist"))
    frequencies: Path = Field(default_factory=lambda: asset_path("frequencies"))
    pos_lexicon: Path = Field(default_factory=lambda: asset_path("pos_lexicon"))
    patterns: Path = Field(default_factory=lambda: asset_path("patterns"))
    allowlist: Optional[Path] = None

    p_threshold: float = 0.05
    positive_threshold: float = 0.05
    negative_threshold: float = -0.05
    min_tokens: int = 3
    window: int = 5
    workers: int = Field(default_factory=default_workers)

    @field_validator("p_threshold")
    @classmethod
    def _check_p_threshold(cls, value: float) -> float:
        if not 0 < value <= 1:
            raise ValueError("p_threshold must be in (0, 1]")
        return value

    @field_validator("positive_threshold", "negative_threshold")
    @classmethod
    def _check_sentiment_threshold(cls, value: float) -> float:
        if not -1 <= value <= 1:
            raise ValueError("sentiment thresholds must be in [-1, 1]")
        return value

    @field_validator("min_tokens", "window", "workers")
    @classmethod
    def _check_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be >= 1")
        return value

    @model_validator(mode="after")
    def _check_ordering(self) -> "RunConfig":
        if self.positive_threshold <= self.negative_threshold:
            raise ValueError("positive_threshold must be greater than negative_threshold")
        return self

    def require(self, *names: str) -> None:
        """
        Ensure the named path settings are set and exist

        Raises:
            ConfigError: naming the first missing input
        """
        for name in names:
            value = getattr(self, name)
            if value is None:
                raise ConfigError(f"--{name.replace('_', '-')} is required")
            if not Path(value).exists():
                raise ConfigError(f"{name} not found: {value}")


def _first_error(exc: ValidationError) -> str:
    error = exc.errors()[0]
    where = ".".join(str(part) for part in error.get("loc", ())) or "config"
    return f"{where}: {error.get('msg', 'invalid value')}"


def load_run_config(config_file: Optional[Path] = None, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """
    Merge environment defaults, a JSON config file and CLI overrides

    Args:
        config_file: Optional JSON object with RunConfig fields
        overrides: Explicitly given CLI values; None entries are ignored

    Returns:
        Validated RunConfig
    """
    values: Dict[str, Any] = {}
    if config_file is not None:
        try:
            with Path(config_file).open(encoding="utf-8") as handle:
                loaded = json.load(handle)
        except json.JSONDecodeError as e:
            raise ConfigError(f"{config_file}: invalid JSON: {e.msg} (line {e.lineno})")
        if not isinstance(loaded, dict):
            raise ConfigError(f"{config_file}: expected a JSON object")
        values.update(loaded)
        logger.debug(f"Loaded config file {config_file}: {', '.join(sorted(loaded))}")

    values.update({key: value for key, value in (overrides or {}).items() if value is not None})
    try:
        return RunConfig(**values)
    except ValidationError as e:
        raise ConfigError(_first_error(e))


def describe(config: RunConfig, fields: Iterable[str]) -> str:
    """One-line summary of selected settings for the log"""
    return ", ".join(f"{name}={getattr(config, name)}" for name in fields)

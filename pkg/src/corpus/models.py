"""
Pydantic models for review corpora and app metadata
"""

from collections import Counter
from datetime import datetime
from typing import Dict, Iterator, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

REVIEW_FIELDS = ("review_id", "app_id", "text", "rating", "likes", "date")
REQUIRED_REVIEW_FIELDS = ("review_id", "app_id", "text")


class Review(BaseModel):
    """
    One user review as exported from the store
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    review_id: str = Field(min_length=1)
    app_id: str = Field(min_length=1)
    text: str
    rating: int = Field(ge=1, le=5)
    likes: int = Field(default=0, ge=0)
    date: Optional[str] = None

    @field_validator("date", mode="before")
    @classmethod
    def _check_date(cls, value):
        if value is None:
            return None
        value = str(value).strip()
        if not value:
            return None
        # fromisoformat only accepts a trailing Z from 3.11 on
        datetime.fromisoformat(value.replace("Z", "+00:00"))
        return value

    def to_dict(self) -> dict:
        """Convert model to dictionary, omitting an absent date"""
        return self.model_dump(exclude_none=True)


class AppRecord(BaseModel):
    """
    Store metadata for one app
    """

    model_config = ConfigDict(frozen=True, extra="ignore")

    app_id: str = Field(min_length=1)
    name: str
    category: str = ""
    description: str = ""


class ReviewCollection(BaseModel):
    """
    Ordered, immutable set of reviews with unique ids
    """

    model_config = ConfigDict(frozen=True)

    reviews: Tuple[Review, ...] = ()

    @model_validator(mode="after")
    def _unique_ids(self) -> "ReviewCollection":
        seen = set()
        for review in self.reviews:
            if review.review_id in seen:
                raise ValueError(f"duplicate review_id {review.review_id!r}")
            seen.add(review.review_id)
        return self

    @property
    def source_counts(self) -> Dict[str, int]:
        """Reviews per app_id, in first-seen order"""
        return dict(Counter(review.app_id for review in self.reviews))

    def __iter__(self) -> Iterator[Review]:  # type: ignore[override]
        return iter(self.reviews)

    def __len__(self) -> int:
        return len(self.reviews)

    def ids(self) -> Tuple[str, ...]:
        return tuple(review.review_id for review in self.reviews)

    def summary(self) -> str:
        counts = ", ".join(f"{app}={n}" for app, n in self.source_counts.items())
        return f"{len(self)} reviews ({counts})" if counts else "0 reviews"

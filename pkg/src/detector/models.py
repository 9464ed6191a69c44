"""
Detection output records
"""

from enum import Enum
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.sentiment.analyzer import Polarity


class Outcome(str, Enum):
    VIOLATION = "violation"
    NO_VIOLATION = "no-violation"
    DEGENERATE = "degenerate"
    FILTERED = "filtered"


class ViolatedItem(BaseModel):
    model_config = ConfigDict(frozen=True)

    item: str
    category: str
    probability: float = Field(gt=0, le=1)


class ViolationRecord(BaseModel):
    """
    One review judged to violate at least one value item
    """

    model_config = ConfigDict(frozen=True)

    review_id: str = Field(min_length=1)
    app_id: str
    items: Tuple[ViolatedItem, ...] = Field(min_length=1)
    compound: float = Field(ge=-1, le=1)
    polarity: Polarity
    features: Tuple[str, ...] = ()
    likes: int = Field(default=0, ge=0)

    @field_validator("polarity")
    @classmethod
    def _not_positive(cls, value: Polarity) -> Polarity:
        if value == Polarity.POSITIVE:
            raise ValueError("a violation cannot carry positive sentiment")
        return value

    @property
    def item_names(self) -> List[str]:
        return [violated.item for violated in self.items]

    @property
    def categories(self) -> List[str]:
        """Distinct violated categories in item order"""
        return list(dict.fromkeys(violated.category for violated in self.items))


class LedgerEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    review_id: str
    app_id: str
    outcome: Outcome

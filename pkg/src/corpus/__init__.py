"""
Review corpus ingestion and the informativeness filter
"""

from src.corpus.loader import filter_informative, load_app_metadata, load_reviews, partition_informative, write_reviews
from src.corpus.models import AppRecord, Review, ReviewCollection

__all__ = [
    "AppRecord",
    "Review",
    "ReviewCollection",
    "filter_informative",
    "load_app_metadata",
    "load_reviews",
    "partition_informative",
    "write_reviews",
]

"""
Exception hierarchy for review-values
"""

from typing import List, Optional


class ReviewValuesError(Exception):
    """Base class for all review-values errors"""


class DataError(ReviewValuesError, ValueError):
    """
    Malformed or inconsistent input data

    Carries the offending file and 1-based line number when known so the
    message can point the operator at the row.
    """

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        location = ""
        if path is not None and line is not None:
            location = f"{path}:{line}: "
        elif path is not None:
            location = f"{path}: "
        elif line is not None:
            location = f"line {line}: "
        super().__init__(f"{location}{message}")


class DictionaryValidationError(DataError):
    """Values dictionary failed one or more structural checks"""

    def __init__(self, problems: List[str], path: Optional[str] = None):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems), path=path)


class ConfigError(ReviewValuesError, ValueError):
    """Invalid run configuration"""

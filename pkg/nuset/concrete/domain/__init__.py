"""有限モデルのドメイン

ν-集合 (nuset.py):
    - LevelFamily, TruncatedNuSet

レポート (report.py):
    - Violation, LevelSummary, ValidationReport
"""

from .nuset import LevelFamily, TruncatedNuSet
from .report import Violation, LevelSummary, ValidationReport

__all__ = [
    "LevelFamily",
    "TruncatedNuSet",
    "Violation",
    "LevelSummary",
    "ValidationReport",
]

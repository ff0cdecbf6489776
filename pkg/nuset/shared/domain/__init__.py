"""共有ドメインモデル

インデックス (indices.py):
    - FaceIndex, CohIndex, face_indices, coh_indices

値 (values.py):
    - Star, Extend, Top, Layered（フレーム・ペインティングの木）

例外 (errors.py):
    - NuSetError とその派生
"""

from .errors import (
    NuSetError,
    IndexRangeError,
    ShapeError,
    KeyGrammarError,
    StageError,
    FibredError,
    DocumentError,
)
from .indices import FaceIndex, CohIndex, face_indices, coh_indices
from .values import Star, Extend, Top, Layered, STAR

__all__ = [
    "NuSetError",
    "IndexRangeError",
    "ShapeError",
    "KeyGrammarError",
    "StageError",
    "FibredError",
    "DocumentError",
    "FaceIndex",
    "CohIndex",
    "face_indices",
    "coh_indices",
    "Star",
    "Extend",
    "Top",
    "Layered",
    "STAR",
]

"""有限モデルのユースケース

- restriction.py: 制限の評価 (RestrictionEvaluator)
- enumeration.py: メモ化付き列挙 (Enumerator)
- coherence.py: 整合性法則の検査
- validation.py: validate
"""

from .restriction import RestrictionEvaluator, eval_restr_frame, eval_restr_painting
from .enumeration import (
    Enumerator,
    enumerate_frames,
    enumerate_fullframe,
    enumerate_layers,
    enumerate_paintings,
)
from .coherence import check_coh_frame, check_coh_painting
from .validation import validate

__all__ = [
    "RestrictionEvaluator",
    "eval_restr_frame",
    "eval_restr_painting",
    "Enumerator",
    "enumerate_frames",
    "enumerate_fullframe",
    "enumerate_layers",
    "enumerate_paintings",
    "check_coh_frame",
    "check_coh_painting",
    "validate",
]

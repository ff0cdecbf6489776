"""記号計算のドメイン（型・項の構文と形式フレーム）"""

from .expr import (
    StarTm,
    PairTm,
    TupleTm,
    VarTm,
    ProjTm,
    RestrTm,
    TermExpr,
    STAR_TM,
    UnitTy,
    SigmaTy,
    FinProdTy,
    FamApp,
    SortTy,
    ArrowTy,
    TypeExpr,
    UNIT,
    SORT,
    FormalFrame,
)
from .coherence import CohReflReport, CohSweepSummary

__all__ = [
    "StarTm",
    "PairTm",
    "TupleTm",
    "VarTm",
    "ProjTm",
    "RestrTm",
    "TermExpr",
    "STAR_TM",
    "UnitTy",
    "SigmaTy",
    "FinProdTy",
    "FamApp",
    "SortTy",
    "ArrowTy",
    "TypeExpr",
    "UNIT",
    "SORT",
    "FormalFrame",
    "CohReflReport",
    "CohSweepSummary",
]

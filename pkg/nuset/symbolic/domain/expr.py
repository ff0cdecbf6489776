"""記号的な型と項の構文

クラス一覧:
    型 (TypeExpr):
        - UnitTy: unit
        - SigmaTy: Σ binder : domain. body
        - FinProdTy: 方向 ε ごとの有限積（長さ ν）
        - FamApp: E_k(arg)（不透明なファミリー頭部の適用）
        - SortTy: 集合の宇宙 HSet
        - ArrowTy: domain → codomain（シグネチャ fullframe → HSet 用）
    項 (TermExpr):
        - StarTm: ⋆
        - PairTm: (fst, snd)
        - TupleTm: 方向 ε ごとのタプル（長さ ν）
        - VarTm: 変数
        - ProjTm: l_ε
        - RestrTm: 簡約できない restr の適用（kind = frame / layer / painting）
    - FormalFrame: 葉が相異なる形式変数であるフレーム
"""

from dataclasses import dataclass
from typing import Tuple, Union


# ============================================================================
# 項
# ============================================================================


@dataclass(frozen=True)
class StarTm:
    """⋆"""


@dataclass(frozen=True)
class PairTm:
    """(fst, snd)"""
    fst: "TermExpr"
    snd: "TermExpr"


@dataclass(frozen=True)
class TupleTm:
    """方向ごとのタプル ⟨t_0 | … | t_{ν−1}⟩"""
    components: Tuple["TermExpr", ...]


@dataclass(frozen=True)
class VarTm:
    """変数"""
    name: str


@dataclass(frozen=True)
class ProjTm:
    """方向 eps への射影 arg_ε"""
    eps: int
    arg: "TermExpr"


@dataclass(frozen=True)
class RestrTm:
    """簡約できない restr^{n,p}_{kind,q,ε}(arg)

    Attributes:
        kind: "frame" / "layer" / "painting"
        n, p, q, eps: インデックス（q ≤ n−p）
        arg: 引数（明示的な組でない項）
    """
    kind: str
    n: int
    p: int
    q: int
    eps: int
    arg: "TermExpr"


TermExpr = Union[StarTm, PairTm, TupleTm, VarTm, ProjTm, RestrTm]

STAR_TM = StarTm()


# ============================================================================
# 型
# ============================================================================


@dataclass(frozen=True)
class UnitTy:
    """unit"""


@dataclass(frozen=True)
class SigmaTy:
    """Σ binder : domain. body"""
    binder: str
    domain: "TypeExpr"
    body: "TypeExpr"


@dataclass(frozen=True)
class FinProdTy:
    """方向 ε ごとの有限積 Π ε. components[ε]"""
    components: Tuple["TypeExpr", ...]


@dataclass(frozen=True)
class FamApp:
    """E_level(arg)"""
    level: int
    arg: TermExpr


@dataclass(frozen=True)
class SortTy:
    """HSet"""


@dataclass(frozen=True)
class ArrowTy:
    """domain → codomain"""
    domain: "TypeExpr"
    codomain: "TypeExpr"


TypeExpr = Union[UnitTy, SigmaTy, FinProdTy, FamApp, SortTy, ArrowTy]

UNIT = UnitTy()
SORT = SortTy()


# ============================================================================
# 形式フレーム
# ============================================================================


@dataclass(frozen=True)
class FormalFrame:
    """frame^{n,p} の一般元（葉は相異なる形式変数）

    Attributes:
        nu: アリティ
        n: レベル
        p: ランク
        term: η-長形式の項（⋆ / PairTm / TupleTm / VarTm だけから成る）
    """
    nu: int
    n: int
    p: int
    term: TermExpr

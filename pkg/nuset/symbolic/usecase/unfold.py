"""frame / layer / painting の型の記号的展開

責務: 不透明な頭部 E_0..E_n の上で、frameⁿ'ᵖ などの型を Σ / 有限積 / E_k(…) の
      入れ子として完全に展開する。

    frame^{n,0}            = unit
    frame^{n,p+1}          = Σ d : frame^{n,p}. layer^{n−1,p}(d)
    layer^{n,p}(d)         = Π ε. painting^{n,p}(restr^{n,p}_{frame,0,ε}(d))
    painting^{n,n}(d)      = E_n(d)
    painting^{n,p<n}(d)    = Σ l : layer^{n−1,p}(d). painting^{n,p+1}((d, l))

束縛変数名は1回の展開の中で一意（d1, d2, … と l1, l2, …）。
"""

from typing import Dict

from ...shared.domain.indices import check_arity, check_rank
from ..domain.expr import (
    SORT,
    STAR_TM,
    UNIT,
    ArrowTy,
    FamApp,
    FinProdTy,
    PairTm,
    SigmaTy,
    TermExpr,
    TypeExpr,
    VarTm,
)
from .normalize import normalize
from .terms import restr_frame_tm


class NameSupply:
    """接頭辞ごとの連番で新しい名前を払い出す

    Examples:
        >>> names = NameSupply()
        >>> names.fresh("l"), names.fresh("l"), names.fresh("d")
        ('l1', 'l2', 'd1')
    """

    def __init__(self):
        self._counters: Dict[str, int] = {}

    def fresh(self, prefix: str) -> str:
        k = self._counters.get(prefix, 0) + 1
        self._counters[prefix] = k
        return f"{prefix}{k}"


# ============================================================================
# 相互再帰
# ============================================================================


def _frame_type(nu: int, n: int, p: int, names: NameSupply) -> TypeExpr:
    if p == 0:
        return UNIT
    binder = names.fresh("d")
    return SigmaTy(
        binder,
        _frame_type(nu, n, p - 1, names),
        _layer_type(nu, n - 1, p - 1, VarTm(binder), names),
    )


def _layer_type(nu: int, n: int, p: int, d: TermExpr, names: NameSupply) -> TypeExpr:
    return FinProdTy(tuple(
        _painting_type(nu, n, p, restr_frame_tm(nu, n, p, 0, eps, d), names)
        for eps in range(nu)
    ))


def _painting_type(nu: int, n: int, p: int, d: TermExpr, names: NameSupply) -> TypeExpr:
    if p == n:
        return FamApp(n, d)
    binder = names.fresh("l")
    return SigmaTy(
        binder,
        _layer_type(nu, n - 1, p, d, names),
        _painting_type(nu, n, p + 1, PairTm(d, VarTm(binder)), names),
    )


# ============================================================================
# 公開API
# ============================================================================


def unfold_frame(nu: int, n: int, p: int) -> TypeExpr:
    """frame^{n,p} の型を展開する

    Raises:
        IndexRangeError: p > n

    Examples:
        >>> unfold_frame(2, 0, 0)
        UnitTy()
    """
    check_arity(nu)
    check_rank(n, p)
    return _frame_type(nu, n, p, NameSupply())


def unfold_layer(nu: int, n: int, p: int, d: TermExpr = VarTm("d")) -> TypeExpr:
    """layer^{n,p}(d) の型を展開する（d は frame^{n+1,p} の項）"""
    check_arity(nu)
    check_rank(n, p)
    return _layer_type(nu, n, p, d, NameSupply())


def unfold_painting(nu: int, n: int, p: int) -> TypeExpr:
    """painting^{n,p} の型を展開する

    フレームは p = 0 なら ⋆、それ以外は自由変数 d。

    Examples:
        >>> unfold_painting(2, 0, 0)
        FamApp(level=0, arg=StarTm())
    """
    check_arity(nu)
    check_rank(n, p)
    d = STAR_TM if p == 0 else VarTm("d")
    return _painting_type(nu, n, p, d, NameSupply())


def signature(nu: int, n: int) -> TypeExpr:
    """E_n の型: 正規化した fullframeⁿ → HSet"""
    return ArrowTy(normalize(unfold_frame(nu, n, n), nu), SORT)

"""型の正規化（表示用の平坦化）

責務: 型を「葉の並び」に平坦化し、右入れ子の Σ テレスコープとして組み直す。

【規則】
- unit の成分は消える（Σ _:unit. T → T）
- 入れ子の Σ と有限積は1本のテレスコープに平坦化する
- Σ の束縛変数は定義域の（η-長の）項で置き換え、restr と射影を簡約する
- 葉（E_k(…), HSet, 矢印型）には正準名 x1, x2, … を順に付ける

正準名を付け直すので normalize は冪等。葉の並びは元の型の直積分解なので、
有限集合としての表示（要素の数え上げ）は変わらない。
"""

from collections import Counter
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from ..domain.expr import (
    STAR_TM,
    UNIT,
    ArrowTy,
    FamApp,
    FinProdTy,
    PairTm,
    SigmaTy,
    SortTy,
    TermExpr,
    TupleTm,
    TypeExpr,
    UnitTy,
    VarTm,
)
from .terms import iter_vars, subst

Binding = Tuple[str, TypeExpr]


class _LeafNames:
    """x1, x2, … を払い出す（自由変数と衝突する名前は飛ばす）"""

    def __init__(self, avoid: Set[str]):
        self.avoid = avoid
        self.k = 0

    def fresh(self) -> str:
        while True:
            self.k += 1
            name = f"x{self.k}"
            if name not in self.avoid:
                return name


# ============================================================================
# 平坦化
# ============================================================================


def flatten(
    t: TypeExpr,
    env: Dict[str, TermExpr],
    names: _LeafNames,
    nu: Optional[int] = None,
) -> Tuple[List[Binding], TermExpr]:
    """型を (葉の束縛列, η-長の一般元) に分解する"""
    if isinstance(t, UnitTy):
        return [], STAR_TM
    if isinstance(t, FamApp):
        x = names.fresh()
        return [(x, FamApp(t.level, subst(t.arg, env, nu)))], VarTm(x)
    if isinstance(t, SortTy):
        x = names.fresh()
        return [(x, t)], VarTm(x)
    if isinstance(t, ArrowTy):
        x = names.fresh()
        return [(x, normalize(t, nu))], VarTm(x)
    if isinstance(t, SigmaTy):
        bound, head = flatten(t.domain, env, names, nu)
        rest, tail = flatten(t.body, {**env, t.binder: head}, names, nu)
        return bound + rest, PairTm(head, tail)
    if isinstance(t, FinProdTy):
        bindings: List[Binding] = []
        components = []
        for component in t.components:
            bound, term = flatten(component, env, names, nu)
            bindings.extend(bound)
            components.append(term)
        return bindings, TupleTm(tuple(components))
    raise TypeError(f"not a type: {t!r}")


def _rebuild(bindings: List[Binding]) -> TypeExpr:
    if not bindings:
        return UNIT
    result = bindings[-1][1]
    for name, leaf in reversed(bindings[:-1]):
        result = SigmaTy(name, leaf, result)
    return result


def normalize(t: TypeExpr, nu: Optional[int] = None) -> TypeExpr:
    """型を正規形（葉の右入れ子テレスコープ）にする

    Args:
        t: 型
        nu: アリティ（None なら型中の有限積の幅から推定）

    Examples:
        >>> normalize(SigmaTy("u", UNIT, FamApp(0, STAR_TM)))
        FamApp(level=0, arg=StarTm())
    """
    if isinstance(t, ArrowTy):
        return ArrowTy(normalize(t.domain, nu), normalize(t.codomain, nu))
    if nu is None:
        nu = _infer_arity(t)
    bindings, _ = flatten(t, {}, _LeafNames(_free_type_vars(t)), nu)
    return _rebuild(bindings)


def generic_term(t: TypeExpr, nu: Optional[int] = None) -> Tuple[List[Binding], TermExpr]:
    """型の η-長の一般元と、その葉の束縛列"""
    if nu is None:
        nu = _infer_arity(t)
    return flatten(t, {}, _LeafNames(_free_type_vars(t)), nu)


# ============================================================================
# テレスコープの読み出し
# ============================================================================


def telescope(t: TypeExpr) -> List[Tuple[Optional[str], TypeExpr]]:
    """正規形の型を (束縛名, 葉) の列にする（最後の葉の名前は None）"""
    if isinstance(t, UnitTy):
        return []
    entries: List[Tuple[Optional[str], TypeExpr]] = []
    while isinstance(t, SigmaTy):
        entries.append((t.binder, t.domain))
        t = t.body
    entries.append((None, t))
    return entries


def count_leaves(t: TypeExpr) -> Counter:
    """正規形の型の葉 E_k(…) をレベルごとに数える

    Examples:
        >>> count_leaves(SigmaTy("x1", FamApp(0, STAR_TM), FamApp(0, STAR_TM)))
        Counter({0: 2})
    """
    return Counter(leaf.level for _, leaf in telescope(t) if isinstance(leaf, FamApp))


# ============================================================================
# 補助
# ============================================================================


def _iter_types(t: TypeExpr) -> Iterator[TypeExpr]:
    yield t
    if isinstance(t, SigmaTy):
        yield from _iter_types(t.domain)
        yield from _iter_types(t.body)
    elif isinstance(t, FinProdTy):
        for c in t.components:
            yield from _iter_types(c)
    elif isinstance(t, ArrowTy):
        yield from _iter_types(t.domain)
        yield from _iter_types(t.codomain)


def _infer_arity(t: TypeExpr) -> Optional[int]:
    for sub in _iter_types(t):
        if isinstance(sub, FinProdTy):
            return len(sub.components)
    return None


def _free_type_vars(t: TypeExpr, bound: FrozenSet[str] = frozenset()) -> Set[str]:
    """どの Σ にも束縛されていない変数（葉の正準名はこれを避ける）"""
    if isinstance(t, FamApp):
        return {v for v in iter_vars(t.arg) if v not in bound}
    if isinstance(t, SigmaTy):
        return _free_type_vars(t.domain, bound) | _free_type_vars(t.body, bound | {t.binder})
    if isinstance(t, FinProdTy):
        return set().union(*(_free_type_vars(c, bound) for c in t.components))
    if isinstance(t, ArrowTy):
        return _free_type_vars(t.domain, bound) | _free_type_vars(t.codomain, bound)
    return set()

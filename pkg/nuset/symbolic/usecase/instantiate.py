"""記号式と具体値の橋渡し

責務:
- 具体的なフレーム / ペインティングを項に写す（と、その逆）
- 形式項の葉を具体的な項に束縛して具体化する
- 型の住人を有限ν-集合 D の上で数え上げる（記号側と具体側の一致検査用）

Examples:
    >>> value_to_term(Extend(STAR, (Top("a"), Top("b"))))
    PairTm(fst=StarTm(), snd=TupleTm(components=(VarTm(name='a'), VarTm(name='b'))))
"""

import itertools
from typing import Dict, Iterator, Optional

from ...concrete.domain.nuset import TruncatedNuSet
from ...shared.domain.errors import ShapeError
from ...shared.domain.values import STAR, Extend, FrameValue, Layered, PaintingValue, Star, Top
from ..domain.expr import (
    STAR_TM,
    FamApp,
    FinProdTy,
    PairTm,
    SigmaTy,
    StarTm,
    TermExpr,
    TupleTm,
    TypeExpr,
    UnitTy,
    VarTm,
)
from .render import render_term
from .terms import subst


# ============================================================================
# 値 ⇔ 項
# ============================================================================


def value_to_term(v) -> TermExpr:
    """FrameValue / PaintingValue を項にする（要素ラベルは変数になる）"""
    if isinstance(v, Star):
        return STAR_TM
    if isinstance(v, Extend):
        return PairTm(value_to_term(v.prefix), TupleTm(tuple(value_to_term(c) for c in v.layer)))
    if isinstance(v, Layered):
        return PairTm(TupleTm(tuple(value_to_term(c) for c in v.layer)), value_to_term(v.rest))
    if isinstance(v, Top):
        return VarTm(v.label)
    raise ShapeError(f"not a frame or painting value: {v!r}")


def term_to_frame(t: TermExpr) -> FrameValue:
    """閉じた（restr を含まない）項をフレーム値に戻す"""
    if isinstance(t, StarTm):
        return STAR
    if isinstance(t, PairTm) and isinstance(t.snd, TupleTm):
        return Extend(term_to_frame(t.fst), tuple(term_to_painting(c) for c in t.snd.components))
    raise ShapeError(f"term is not a frame: {render_term(t)}")


def term_to_painting(t: TermExpr) -> PaintingValue:
    """閉じた項をペインティング値に戻す"""
    if isinstance(t, VarTm):
        return Top(t.name)
    if isinstance(t, PairTm) and isinstance(t.fst, TupleTm):
        return Layered(tuple(term_to_painting(c) for c in t.fst.components), term_to_painting(t.snd))
    raise ShapeError(f"term is not a painting: {render_term(t)}")


# ============================================================================
# 形式項の具体化
# ============================================================================


def match_leaves(formal: TermExpr, concrete: TermExpr) -> Dict[str, TermExpr]:
    """形式項と同じ形の具体項を照合し、葉の変数 → 具体項の対応を返す

    Raises:
        ShapeError: 形が合わない、または同じ葉が別の値に対応する
    """
    binding: Dict[str, TermExpr] = {}
    _match(formal, concrete, binding)
    return binding


def _match(formal: TermExpr, concrete: TermExpr, binding: Dict[str, TermExpr]) -> None:
    if isinstance(formal, VarTm):
        seen = binding.setdefault(formal.name, concrete)
        if seen != concrete:
            raise ShapeError(f"leaf {formal.name} is bound twice")
        return
    if isinstance(formal, StarTm) and isinstance(concrete, StarTm):
        return
    if isinstance(formal, PairTm) and isinstance(concrete, PairTm):
        _match(formal.fst, concrete.fst, binding)
        _match(formal.snd, concrete.snd, binding)
        return
    if (
        isinstance(formal, TupleTm)
        and isinstance(concrete, TupleTm)
        and len(formal.components) == len(concrete.components)
    ):
        for a, b in zip(formal.components, concrete.components):
            _match(a, b, binding)
        return
    raise ShapeError(f"shape mismatch: {render_term(formal)} against {render_term(concrete)}")


def instantiate(formal: TermExpr, binding: Dict[str, TermExpr], nu: Optional[int] = None) -> TermExpr:
    """形式項の葉を binding で置き換える"""
    return subst(formal, binding, nu)


# ============================================================================
# 住人の数え上げ
# ============================================================================


def inhabitants(
    t: TypeExpr,
    D: TruncatedNuSet,
    env: Optional[Dict[str, TermExpr]] = None,
) -> Iterator[TermExpr]:
    """型 t の住人を D の上で列挙する

    E_k(arg) の住人は arg を具体的なフレームに評価し、D のファイバーから取る。

    Raises:
        ShapeError: 住人を列挙できない型（HSet・矢印型）やファイバーの欠落
    """
    env = env or {}
    if isinstance(t, UnitTy):
        yield STAR_TM
    elif isinstance(t, FamApp):
        frame = term_to_frame(subst(t.arg, env, D.nu))
        for label in D.family(t.level).fiber(frame.key):
            yield VarTm(label)
    elif isinstance(t, SigmaTy):
        for head in inhabitants(t.domain, D, env):
            for tail in inhabitants(t.body, D, {**env, t.binder: head}):
                yield PairTm(head, tail)
    elif isinstance(t, FinProdTy):
        choices = [list(inhabitants(c, D, env)) for c in t.components]
        for combo in itertools.product(*choices):
            yield TupleTm(tuple(combo))
    else:
        raise ShapeError(f"cannot enumerate inhabitants of {type(t).__name__}")


def count_instances(t: TypeExpr, D: TruncatedNuSet) -> int:
    """型 t の住人の数"""
    return sum(1 for _ in inhabitants(t, D))

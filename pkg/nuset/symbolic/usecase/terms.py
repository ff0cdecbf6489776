"""項の簡約付きコンストラクタと代入

責務: restr / 射影を明示的な組の上で簡約しながら項を組み立てる。

    restr_frame^{n,0}(t)                 → ⋆
    restr_frame^{n,p+1}((d, l))          → (restr_frame^{n,p}_{q+1}(d), restr_layer^{n−1,p}_q(l))
    restr_layer^{n,p}(l)                 → ⟨restr_painting^{n,p}(l_ω)⟩_ω        （η展開）
    restr_painting^{n,p}_0((l, c))       → l_ε
    restr_painting^{n,p}_{q+1}((l, c))   → (restr_layer^{n−1,p}_q(l), restr_painting^{n,p+1}_q(c))
    ⟨t_0 | … ⟩_ε                         → t_ε

組でない引数（変数など）に対する restr は RestrTm のまま残る。代入後に
subst が同じ規則で簡約し直す。
"""

from typing import Dict, Iterator, Optional, Set

from ...shared.domain.errors import IndexRangeError
from ..domain.expr import (
    STAR_TM,
    PairTm,
    ProjTm,
    RestrTm,
    StarTm,
    TermExpr,
    TupleTm,
    VarTm,
)


def _check_restr(n: int, p: int, q: int, eps: int) -> None:
    if p < 0 or p > n or q < 0 or q > n - p or eps < 0:
        raise IndexRangeError(f"restr^{n},{p} with q={q}, eps={eps} is out of range")


def proj_tm(eps: int, t: TermExpr) -> TermExpr:
    """t_ε（明示的なタプルならβ簡約）"""
    if isinstance(t, TupleTm):
        if eps >= len(t.components):
            raise IndexRangeError(f"projection {eps} of a {len(t.components)}-tuple")
        return t.components[eps]
    return ProjTm(eps, t)


def restr_frame_tm(nu: Optional[int], n: int, p: int, q: int, eps: int, t: TermExpr) -> TermExpr:
    """restr^{n,p}_{frame,q,ε}(t)"""
    _check_restr(n, p, q, eps)
    if p == 0:
        return STAR_TM
    if isinstance(t, PairTm):
        return PairTm(
            restr_frame_tm(nu, n, p - 1, q + 1, eps, t.fst),
            restr_layer_tm(nu, n - 1, p - 1, q, eps, t.snd),
        )
    return RestrTm("frame", n, p, q, eps, t)


def restr_layer_tm(nu: Optional[int], n: int, p: int, q: int, eps: int, t: TermExpr) -> TermExpr:
    """restr^{n,p}_{layer,q,ε}(t)（幅が分かればη展開）"""
    _check_restr(n, p, q, eps)
    width = len(t.components) if isinstance(t, TupleTm) else nu
    if width is None:
        return RestrTm("layer", n, p, q, eps, t)
    return TupleTm(tuple(restr_painting_tm(nu, n, p, q, eps, proj_tm(omega, t)) for omega in range(width)))


def restr_painting_tm(nu: Optional[int], n: int, p: int, q: int, eps: int, t: TermExpr) -> TermExpr:
    """restr^{n,p}_{painting,q,ε}(t)"""
    _check_restr(n, p, q, eps)
    if isinstance(t, PairTm):
        if q == 0:
            return proj_tm(eps, t.fst)
        return PairTm(
            restr_layer_tm(nu, n - 1, p, q - 1, eps, t.fst),
            restr_painting_tm(nu, n, p + 1, q - 1, eps, t.snd),
        )
    return RestrTm("painting", n, p, q, eps, t)


_RESTR = {
    "frame": restr_frame_tm,
    "layer": restr_layer_tm,
    "painting": restr_painting_tm,
}


def subst(t: TermExpr, env: Dict[str, TermExpr], nu: Optional[int] = None) -> TermExpr:
    """変数を env で置き換え、restr / 射影を簡約し直す（1パス）"""
    if isinstance(t, VarTm):
        return env.get(t.name, t)
    if isinstance(t, StarTm):
        return t
    if isinstance(t, PairTm):
        return PairTm(subst(t.fst, env, nu), subst(t.snd, env, nu))
    if isinstance(t, TupleTm):
        return TupleTm(tuple(subst(c, env, nu) for c in t.components))
    if isinstance(t, ProjTm):
        return proj_tm(t.eps, subst(t.arg, env, nu))
    if isinstance(t, RestrTm):
        return _RESTR[t.kind](nu, t.n, t.p, t.q, t.eps, subst(t.arg, env, nu))
    raise TypeError(f"not a term: {t!r}")


def iter_vars(t: TermExpr) -> Iterator[str]:
    """項に現れる変数を左から順に列挙する（重複あり）"""
    if isinstance(t, VarTm):
        yield t.name
    elif isinstance(t, PairTm):
        yield from iter_vars(t.fst)
        yield from iter_vars(t.snd)
    elif isinstance(t, TupleTm):
        for c in t.components:
            yield from iter_vars(c)
    elif isinstance(t, (ProjTm, RestrTm)):
        yield from iter_vars(t.arg)


def free_vars(t: TermExpr) -> Set[str]:
    return set(iter_vars(t))

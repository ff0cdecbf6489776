"""形式フレーム上の制限と、整合性の記号的検査

責務:
- frame^{n,p} / painting^{n,p} の一般元（葉が相異なる形式変数 x1, x2, …）を作る
- 一般元に restr を記号的に適用する
- 整合性の2つの合成が同じ正規形になる（反射律で証明される）ことを確かめる

形式変数の並びは normalize が葉に付ける名前の並びと一致する。
"""

import logging
from functools import lru_cache
from itertools import count
from typing import Iterator, List, Tuple

from ...shared.domain.errors import ShapeError
from ...shared.domain.indices import CohIndex, check_arity, check_coh, check_face, check_rank, coh_indices
from ..domain.coherence import CohReflReport, CohSweepSummary
from ..domain.expr import STAR_TM, FormalFrame, PairTm, TermExpr, TupleTm, VarTm
from .terms import restr_frame_tm, restr_painting_tm

logger = logging.getLogger(__name__)


# ============================================================================
# 一般元
# ============================================================================


class _Shapes:
    """η-長の一般元を組み立てる（葉の名前は共有の連番）"""

    def __init__(self, nu: int):
        self.nu = nu
        self._ids = count(1)

    def leaf(self) -> TermExpr:
        return VarTm(f"x{next(self._ids)}")

    def frame(self, n: int, p: int) -> TermExpr:
        if p == 0:
            return STAR_TM
        return PairTm(self.frame(n, p - 1), self.layer(n - 1, p - 1))

    def layer(self, n: int, p: int) -> TermExpr:
        return TupleTm(tuple(self.painting(n, p) for _ in range(self.nu)))

    def painting(self, n: int, p: int) -> TermExpr:
        if p == n:
            return self.leaf()
        return PairTm(self.layer(n - 1, p), self.painting(n, p + 1))


@lru_cache(maxsize=None)
def formal_frame(nu: int, n: int, p: int) -> FormalFrame:
    """frame^{n,p} の一般元

    Examples:
        >>> formal_frame(2, 1, 1).term
        PairTm(fst=StarTm(), snd=TupleTm(components=(VarTm(name='x1'), VarTm(name='x2'))))
    """
    check_arity(nu)
    check_rank(n, p)
    return FormalFrame(nu, n, p, _Shapes(nu).frame(n, p))


@lru_cache(maxsize=None)
def formal_painting(nu: int, n: int, p: int) -> Tuple[FormalFrame, TermExpr]:
    """frame^{n,p} の一般元 d と、その上の painting^{n,p}(d) の一般元

    d の葉と painting の葉は1つの連番を共有する。
    """
    check_arity(nu)
    check_rank(n, p)
    shapes = _Shapes(nu)
    d = FormalFrame(nu, n, p, shapes.frame(n, p))
    return d, shapes.painting(n, p)


def leaf_names(t: TermExpr) -> List[str]:
    """形式項の葉の名前を左から順に並べる"""
    return [v.name for v in _iter_leaves(t)]


def _iter_leaves(t: TermExpr) -> Iterator[VarTm]:
    if isinstance(t, VarTm):
        yield t
    elif isinstance(t, PairTm):
        yield from _iter_leaves(t.fst)
        yield from _iter_leaves(t.snd)
    elif isinstance(t, TupleTm):
        for c in t.components:
            yield from _iter_leaves(c)


# ============================================================================
# 記号的な制限
# ============================================================================


def symbolic_restr_frame(nu: int, n: int, p: int, q: int, eps: int, d: FormalFrame) -> FormalFrame:
    """restr^{n,p}_{frame,q,ε} を形式フレームに適用する

    Args:
        d: frame^{n+1,p} の形式フレーム

    Raises:
        ShapeError: d の (ν, レベル, ランク) が合わない
        IndexRangeError: q > n−p または ε ≥ ν

    Examples:
        >>> symbolic_restr_frame(2, 0, 0, 0, 1, formal_frame(2, 1, 0)).term
        StarTm()
    """
    check_face(n, p, q, eps, nu)
    if d.nu != nu or d.n != n + 1 or d.p != p:
        raise ShapeError(f"expected a formal frame^{n + 1},{p} with nu={nu}, got frame^{d.n},{d.p} with nu={d.nu}")
    return FormalFrame(nu, n, p, restr_frame_tm(nu, n, p, q, eps, d.term))


def symbolic_restr_painting(nu: int, n: int, p: int, q: int, eps: int, c: TermExpr) -> TermExpr:
    """restr^{n,p}_{painting,q,ε} を形式 painting（painting^{n+1,p}）に適用する"""
    check_face(n, p, q, eps, nu)
    return restr_painting_tm(nu, n, p, q, eps, c)


# ============================================================================
# 整合性
# ============================================================================


def check_coh_refl(nu: int, n: int, p: int, q: int, r: int, eps: int, omega: int) -> CohReflReport:
    """frame 整合性の両辺を一般元 d ∈ frame^{n+2,p} で正規化して比べる

    restr^{n,p}_{q,ε}(restr^{n+1,p}_{r,ω}(d)) と restr^{n,p}_{r,ω}(restr^{n+1,p}_{q+1,ε}(d))
    が構文的に一致すれば、その法則は反射律で成り立つ。

    Raises:
        IndexRangeError: r ≤ q ≤ n−p を満たさない

    Examples:
        >>> check_coh_refl(2, 1, 0, 1, 0, 0, 1).holds
        True
    """
    coh = CohIndex(q, r, eps, omega)
    check_coh(n, p, coh, nu)
    d = formal_frame(nu, n + 2, p)
    lhs = symbolic_restr_frame(nu, n, p, q, eps, symbolic_restr_frame(nu, n + 1, p, r, omega, d))
    rhs = symbolic_restr_frame(nu, n, p, r, omega, symbolic_restr_frame(nu, n + 1, p, q + 1, eps, d))
    return CohReflReport(nu, n, p, coh, "frame", lhs.term, rhs.term, mismatch_paths(lhs.term, rhs.term))


def check_coh_refl_painting(nu: int, n: int, p: int, q: int, r: int, eps: int, omega: int) -> CohReflReport:
    """painting 整合性の両辺を一般元 c ∈ painting^{n+2,p}(d) で正規化して比べる"""
    coh = CohIndex(q, r, eps, omega)
    check_coh(n, p, coh, nu)
    _, c = formal_painting(nu, n + 2, p)
    lhs = symbolic_restr_painting(nu, n, p, q, eps, symbolic_restr_painting(nu, n + 1, p, r, omega, c))
    rhs = symbolic_restr_painting(nu, n, p, r, omega, symbolic_restr_painting(nu, n + 1, p, q + 1, eps, c))
    return CohReflReport(nu, n, p, coh, "painting", lhs, rhs, mismatch_paths(lhs, rhs))


def sweep_coh_refl(nu: int, max_level: int, paintings: bool = False) -> CohSweepSummary:
    """n ≤ max_level の全 (n, p, q, r, ε, ω) で整合性を記号的に検査する

    Args:
        nu: アリティ
        max_level: 結果側レベル n の上限
        paintings: painting 整合性も検査するか

    Returns:
        CohSweepSummary（checked は frame 側の検査数、paintings=True なら painting 側も加算）
    """
    summary = CohSweepSummary(nu=nu, max_level=max_level)
    checks = [check_coh_refl] + ([check_coh_refl_painting] if paintings else [])
    for n in range(max_level + 1):
        for p in range(n + 1):
            for coh in coh_indices(n, p, nu):
                for check in checks:
                    report = check(nu, n, p, coh.q, coh.r, coh.eps, coh.omega)
                    summary.checked += 1
                    summary.by_level[n] = summary.by_level.get(n, 0) + 1
                    if not report.holds:
                        summary.failures.append(report)
    logger.info(
        "symbolic coherence sweep nu=%d n<=%d: %d checked, %d failures",
        nu, max_level, summary.checked, len(summary.failures),
    )
    return summary


def mismatch_paths(lhs: TermExpr, rhs: TermExpr, path: str = "") -> List[str]:
    """2つの項が食い違う最も浅い位置のパスを列挙する

    Examples:
        >>> mismatch_paths(PairTm(VarTm("a"), VarTm("b")), PairTm(VarTm("a"), VarTm("c")))
        ['snd']
    """
    if lhs == rhs:
        return []
    if isinstance(lhs, PairTm) and isinstance(rhs, PairTm):
        return (
            mismatch_paths(lhs.fst, rhs.fst, _join(path, "fst"))
            + mismatch_paths(lhs.snd, rhs.snd, _join(path, "snd"))
        )
    if isinstance(lhs, TupleTm) and isinstance(rhs, TupleTm) and len(lhs.components) == len(rhs.components):
        found: List[str] = []
        for eps, (a, b) in enumerate(zip(lhs.components, rhs.components)):
            found.extend(mismatch_paths(a, b, _join(path, str(eps))))
        return found
    return [path or "<root>"]


def _join(path: str, step: str) -> str:
    return f"{path}.{step}" if path else step

"""整合性法則の検査（決定可能な等号による）

責務: 制限の合成が可換であることを値の構造的等号で確かめる。

    restr^{n,p}_{q,ε} ∘ restr^{n+1,p}_{r,ω} = restr^{n,p}_{r,ω} ∘ restr^{n+1,p}_{q+1,ε}    (r ≤ q ≤ n−p)

有限集合では等号が決定可能なので、高次の整合性（2次元の整合性）は自動的に成り立ち、
表現しない。
"""

from typing import Optional

from ...shared.domain.indices import CohIndex, check_coh
from ...shared.domain.values import FrameValue, PaintingValue
from .restriction import RestrictionEvaluator


def coh_frame_sides(
    evaluator: RestrictionEvaluator, n: int, p: int, coh: CohIndex, d: FrameValue
):
    """frame 整合性の両辺 (左辺, 右辺) を返す（d ∈ frame^{n+2,p}）"""
    check_coh(n, p, coh, evaluator.nu)
    lhs = evaluator.restr_frame(n, p, coh.q, coh.eps, evaluator.restr_frame(n + 1, p, coh.r, coh.omega, d))
    rhs = evaluator.restr_frame(n, p, coh.r, coh.omega, evaluator.restr_frame(n + 1, p, coh.q + 1, coh.eps, d))
    return lhs, rhs


def coh_painting_sides(
    evaluator: RestrictionEvaluator, n: int, p: int, coh: CohIndex, c: PaintingValue
):
    """painting 整合性の両辺 (左辺, 右辺) を返す（c ∈ painting^{n+2,p}）"""
    check_coh(n, p, coh, evaluator.nu)
    lhs = evaluator.restr_painting(n, p, coh.q, coh.eps, evaluator.restr_painting(n + 1, p, coh.r, coh.omega, c))
    rhs = evaluator.restr_painting(n, p, coh.r, coh.omega, evaluator.restr_painting(n + 1, p, coh.q + 1, coh.eps, c))
    return lhs, rhs


def check_coh_frame(
    D,
    n: int,
    p: int,
    coh: CohIndex,
    d: FrameValue,
    evaluator: Optional[RestrictionEvaluator] = None,
) -> bool:
    """frame 整合性を d ∈ frame^{n+2,p} で検査する

    Args:
        D: TruncatedNuSet
        n, p: 結果のレベルとランク
        coh: (q, r, ε, ω)、r ≤ q ≤ n−p
        d: レベル n+2 のランク p フレーム
        evaluator: 差し替え用の評価器（None なら標準）

    Returns:
        両辺の合成フレームが構造的に等しいか
    """
    evaluator = evaluator or RestrictionEvaluator(D.nu)
    lhs, rhs = coh_frame_sides(evaluator, n, p, coh, d)
    return lhs == rhs


def check_coh_painting(
    D,
    E,
    n: int,
    p: int,
    coh: CohIndex,
    d: FrameValue,
    c: PaintingValue,
    evaluator: Optional[RestrictionEvaluator] = None,
) -> bool:
    """painting 整合性を c ∈ painting^{n+2,p}(d) で検査する

    両辺のペインティングは check_coh_frame が保証する同じフレームの上にある。
    フレームの整合性も合わせて確認する。
    """
    evaluator = evaluator or RestrictionEvaluator(D.nu)
    frame_lhs, frame_rhs = coh_frame_sides(evaluator, n, p, coh, d)
    if frame_lhs != frame_rhs:
        return False
    lhs, rhs = coh_painting_sides(evaluator, n, p, coh, c)
    return lhs == rhs

"""段階的ビルダー

責務: レベル束を init_bundle から1レベルずつ build_level で持ち上げる。

    init_bundle(ν)            : レベル0（frame^{0,0} = {⋆}、証明書は自明に真）
    build_level(b, E_m)       : レベル m の束に E_m を受け入れてレベル m+1 の束を作る
    build_tower(ν, [E_0, …])  : build_level の畳み込み（最後のレベルは閉じる）

各ステージの実行記録は logging に流し、束の trace にも残す。
"""

import logging
from typing import Iterable, Optional, Sequence

from ...concrete.domain.nuset import LevelFamily
from ...concrete.usecase.restriction import RestrictionEvaluator
from ...shared.domain.errors import StageError
from ...shared.domain.indices import check_arity
from ...shared.domain.values import STAR
from ..domain.bundle import StageBundle
from .stages import COH2_NOTE, DEFAULT_STAGES, StageContext, StageStep

logger = logging.getLogger(__name__)

_OUTPUTS = ("frames_next", "paintings", "restr_frame", "restr_painting", "coh_frame", "coh_painting")


def init_bundle(nu: int) -> StageBundle:
    """レベル0の束

    Examples:
        >>> b = init_bundle(2)
        >>> b.level, list(b.frames[(0, 0)])
        (0, ['*'])
    """
    check_arity(nu)
    return StageBundle(nu=nu, level=0, frames={(0, 0): {STAR.key: STAR}})


def build_level(
    bundle: StageBundle,
    family: LevelFamily,
    evaluator: Optional[RestrictionEvaluator] = None,
    stages: Sequence[StageStep] = DEFAULT_STAGES,
    lookahead: bool = True,
) -> StageBundle:
    """E_m を受け入れてレベル m+1 の束を作る

    Args:
        bundle: レベル m の束
        family: E_m（キー集合は frame^{m,m} と一致しなければならない）
        evaluator: 制限の評価器（None なら標準）
        stages: 実行するステージ列（並べ替え・差し替えはテスト用）
        lookahead: True なら E_{m+1} のための frame^{m+1,·} と
            restr_frame^{m,·}・coh_frame^{m−1,·} も作る。
            False なら束を閉じる（それ以上 build_level できない）

    Returns:
        レベル m+1 の束

    Raises:
        StageError: どのステージのどの依存関係が破れたか
    """
    m = bundle.level
    ctx = StageContext(m, evaluator or RestrictionEvaluator(bundle.nu), lookahead)
    ctx.provide("bundle", bundle)
    ctx.provide("E", family)

    traces = []
    for step in stages:
        deps = ctx.view(step.stage, step.requires)
        trace = step.run(ctx, deps)
        logger.info(trace.line())
        traces.append(trace)

    for name in _OUTPUTS:
        if name not in ctx.entries:
            raise StageError("assemble", m, f"{name} -> bundle", "stage output missing")
    e = ctx.entries
    return StageBundle(
        nu=bundle.nu,
        level=m + 1,
        families=bundle.families + (family,),
        frames={**bundle.frames, **{(m + 1, p): t for p, t in e["frames_next"].items()}},
        paintings={**bundle.paintings, **{(m, p): t for p, t in e["paintings"].items()}},
        restr_frame={**bundle.restr_frame, **{(m, p): t for p, t in e["restr_frame"].items()}},
        restr_painting={**bundle.restr_painting, **{(m - 1, p): t for p, t in e["restr_painting"].items()}},
        coh_frame={**bundle.coh_frame, **{(m - 1, p): ok for p, ok in e["coh_frame"].items()}},
        coh_painting={**bundle.coh_painting, **{(m - 2, p): ok for p, ok in e["coh_painting"].items()}},
        notes=bundle.notes + ((COH2_NOTE,) if m >= 1 and COH2_NOTE not in bundle.notes else ()),
        trace=bundle.trace + tuple(traces),
    )


def build_tower(
    nu: int,
    families: Iterable[LevelFamily],
    evaluator: Optional[RestrictionEvaluator] = None,
    stages: Sequence[StageStep] = DEFAULT_STAGES,
    lookahead: bool = False,
) -> StageBundle:
    """E_0, E_1, … を順に受け入れる

    次のファミリーがあるレベルだけ先読みし、最後のレベルは閉じる。
    検査する範囲は validate と同じ（レベル depth−1 まで）になる。

    Args:
        lookahead: True なら最後のレベルも先読みし、束を開いたまま返す

    Raises:
        StageError: 失敗したレベルとステージ（level 属性がレベル番号）

    Examples:
        >>> build_tower(2, []).level
        0
    """
    families = tuple(families)
    bundle = init_bundle(nu)
    for i, family in enumerate(families):
        has_next = i + 1 < len(families)
        bundle = build_level(bundle, family, evaluator, stages, lookahead=lookahead or has_next)
        logger.info(
            "level %d accepted: %d fibers, %d elements%s",
            family.level, len(family.fibers), family.element_count, "" if bundle.is_open else " (closed)",
        )
    return bundle

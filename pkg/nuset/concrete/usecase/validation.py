"""有限ν-集合の検証

責務: D : νSet^{<N} が妥当か（テレスコープとして整合しているか）を調べ、
      違反を ValidationReport にまとめる。例外は送出しない。

【検査の流れ】
1. レベルごとのファイバー検査
   - キー集合 = fullframeⁿ のキー集合
   - ラベル列が昇順・重複なし・文法どおり
   違反のあるレベルより上は列挙が定まらないので検査を打ち切る
2. 面の所属検査（レベル m ≤ N−1）
   - restr_frame^{m−1,p}(d) ∈ frame^{m−1,p}
   - restr_painting^{m−1,p}(c) ∈ painting^{m−1,p}(restr_frame^{m−1,p}(d))
3. 整合性の全数検査（レベル n+2 ≤ N−1）
   - check_coh_frame / check_coh_painting の全インデックス・全値

frame^{N,·}（次に追加されるファミリーのキー集合）は列挙しない。
"""

import logging
from typing import Optional

from ...shared.domain.errors import NuSetError
from ...shared.domain.indices import coh_indices, face_indices
from ...shared.utils.canonical_key import is_valid_label
from ..domain.nuset import TruncatedNuSet
from ..domain.report import ValidationReport
from .coherence import coh_frame_sides, coh_painting_sides
from .enumeration import Enumerator
from .restriction import RestrictionEvaluator

logger = logging.getLogger(__name__)


def validate(D: TruncatedNuSet, evaluator: Optional[RestrictionEvaluator] = None) -> ValidationReport:
    """D を検証する

    Args:
        D: 検証対象
        evaluator: 制限の評価器（変異テスト用に差し替え可能）

    Returns:
        ValidationReport（violations が空なら妥当）

    Examples:
        >>> validate(TruncatedNuSet(nu=2)).is_valid
        True
    """
    report = ValidationReport(nu=D.nu, depth=D.depth)
    enumerator = Enumerator.of(D, evaluator)

    valid_depth = _check_fibers(D, enumerator, report)
    logger.info("fiber check: %d of %d levels well keyed", valid_depth, D.depth)

    _check_face_membership(enumerator, valid_depth, report)
    _check_coherence(enumerator, valid_depth, report)
    logger.info(
        "validation finished: %d violations, %d face checks, %d coherence checks",
        len(report.violations),
        report.face_checks,
        report.coherence_checks,
    )
    return report


# ============================================================================
# 1. ファイバー検査
# ============================================================================


def _check_fibers(D: TruncatedNuSet, enumerator: Enumerator, report: ValidationReport) -> int:
    """キー集合とラベル列を検査し、妥当だったレベル数を返す"""
    for m, family in enumerate(D.levels):
        summary = report.summary(m)
        before = len(report.violations)
        try:
            expected = enumerator.fullframes(m)
        except NuSetError as e:
            report.add(m, "enumeration", str(e), getattr(e, "key", None))
            report.skipped_from = m
            return m

        expected_keys = {d.key for d in expected}
        actual_keys = set(family.fibers)
        for key in sorted(expected_keys - actual_keys):
            report.add(m, "missing_key", "fullframe without a fiber", key)
        for key in sorted(actual_keys - expected_keys):
            report.add(m, "extra_key", "fiber keyed on a non-fullframe", key)

        for key in sorted(actual_keys):
            labels = list(family.fibers[key])
            bad = [x for x in labels if not is_valid_label(x)]
            for x in bad:
                report.add(m, "bad_label", f"label {x!r} violates [A-Za-z0-9_]+", key)
            if len(set(labels)) != len(labels):
                report.add(m, "duplicate_label", "fiber lists a label twice", key)
            elif labels != sorted(labels):
                report.add(m, "unsorted_labels", "fiber labels are not sorted", key)

        summary.fullframes = len(expected)
        summary.elements = family.element_count
        if len(report.violations) > before:
            if m + 1 < D.depth:
                report.skipped_from = m + 1
            return m
    return D.depth


# ============================================================================
# 2. 面の所属検査
# ============================================================================


def _check_face_membership(enumerator: Enumerator, depth: int, report: ValidationReport) -> None:
    evaluator = enumerator.evaluator
    nu = enumerator.nu
    for m in range(1, depth):
        summary = report.summary(m)
        for p in range(m):
            faces = face_indices(m - 1, p, nu)
            target_frames = enumerator.frame_keys(m - 1, p)
            for d in enumerator.frames(m, p):
                paintings = enumerator.paintings(m, p, d)
                for f in faces:
                    summary.face_checks += 1
                    try:
                        rd = evaluator.restr_frame(m - 1, p, f.q, f.eps, d)
                    except NuSetError as e:
                        report.add(m, "face_membership", f"restr_frame^{m - 1},{p} q={f.q} eps={f.eps}: {e}", d.key)
                        continue
                    if rd.key not in target_frames:
                        report.add(
                            m, "face_membership",
                            f"restr_frame^{m - 1},{p} q={f.q} eps={f.eps} leaves frame^{m - 1},{p}", d.key,
                        )
                        continue
                    target_paintings = enumerator.painting_keys(m - 1, p, rd)
                    for c in paintings:
                        summary.face_checks += 1
                        try:
                            rc = evaluator.restr_painting(m - 1, p, f.q, f.eps, c)
                        except NuSetError as e:
                            report.add(m, "face_membership", f"restr_painting^{m - 1},{p} q={f.q} eps={f.eps}: {e}", c.key)
                            continue
                        if rc.key not in target_paintings:
                            report.add(
                                m, "face_membership",
                                f"restr_painting^{m - 1},{p} q={f.q} eps={f.eps} leaves painting^{m - 1},{p}", c.key,
                            )


# ============================================================================
# 3. 整合性の全数検査
# ============================================================================


def _check_coherence(enumerator: Enumerator, depth: int, report: ValidationReport) -> None:
    evaluator = enumerator.evaluator
    nu = enumerator.nu
    for n in range(depth - 2):
        level = n + 2
        summary = report.summary(level)
        for p in range(n + 1):
            indices = coh_indices(n, p, nu)
            for d in enumerator.frames(level, p):
                for coh in indices:
                    summary.coherence_checks += 1
                    try:
                        lhs, rhs = coh_frame_sides(evaluator, n, p, coh, d)
                    except NuSetError as e:
                        report.add(level, "coh_frame", f"p={p} {_describe(coh)}: {e}", d.key)
                        continue
                    if lhs != rhs:
                        report.add(level, "coh_frame", f"p={p} {_describe(coh)}: {lhs.key} != {rhs.key}", d.key)
                for c in enumerator.paintings(level, p, d):
                    for coh in indices:
                        summary.coherence_checks += 1
                        try:
                            lhs, rhs = coh_painting_sides(evaluator, n, p, coh, c)
                        except NuSetError as e:
                            report.add(level, "coh_painting", f"p={p} {_describe(coh)}: {e}", c.key)
                            continue
                        if lhs != rhs:
                            report.add(level, "coh_painting", f"p={p} {_describe(coh)}: {lhs.key} != {rhs.key}", c.key)


def _describe(coh) -> str:
    return f"q={coh.q} r={coh.r} eps={coh.eps} omega={coh.omega}"

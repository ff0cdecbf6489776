"""検証レポートのドメインモデル

クラス一覧:
    - Violation: 1件の違反
    - LevelSummary: レベルごとの集計
    - ValidationReport: validate の結果全体
"""

from dataclasses import dataclass, field
from typing import List, Optional


# ============================================================================
# 違反
# ============================================================================


@dataclass
class Violation:
    """検証で見つかった1件の違反

    Attributes:
        level: 違反が見つかったレベル
        kind: 種別
            - "missing_key" / "extra_key": ファイバーのキー集合の不一致
            - "unsorted_labels" / "duplicate_label" / "bad_label": ラベル列の不正
            - "enumeration": 列挙の途中で形の不整合が起きた
            - "face_membership": 制限の結果が列挙に含まれない
            - "coh_frame" / "coh_painting": 整合性法則の不成立
        detail: 人間向けの説明
        key: 問題の正準キー（あれば）
    """
    level: int
    kind: str
    detail: str
    key: Optional[str] = None

    def describe(self) -> str:
        text = f"level {self.level} [{self.kind}] {self.detail}"
        if self.key is not None:
            text += f" (key={self.key})"
        return text


# ============================================================================
# 集計
# ============================================================================


@dataclass
class LevelSummary:
    """レベル n の集計

    Attributes:
        level: レベル
        fullframes: |fullframeⁿ|
        elements: |X_n|（全要素数）
        face_checks: 所属検査した制限の件数
        coherence_checks: 検査した整合性タプルの件数
    """
    level: int
    fullframes: int = 0
    elements: int = 0
    face_checks: int = 0
    coherence_checks: int = 0


@dataclass
class ValidationReport:
    """validate の結果

    Attributes:
        nu: アリティ
        depth: レベル数
        levels: レベルごとの集計
        violations: 違反の一覧（空なら妥当）
        skipped_from: 上位レベルの検査を打ち切ったレベル（なければ None）
    """
    nu: int
    depth: int
    levels: List[LevelSummary] = field(default_factory=list)
    violations: List[Violation] = field(default_factory=list)
    skipped_from: Optional[int] = None

    @property
    def is_valid(self) -> bool:
        return not self.violations

    @property
    def coherence_checks(self) -> int:
        return sum(s.coherence_checks for s in self.levels)

    @property
    def face_checks(self) -> int:
        return sum(s.face_checks for s in self.levels)

    def add(self, level: int, kind: str, detail: str, key: Optional[str] = None) -> None:
        self.violations.append(Violation(level, kind, detail, key))

    def summary(self, level: int) -> LevelSummary:
        """レベルの集計を取得（なければ作成）"""
        for s in self.levels:
            if s.level == level:
                return s
        s = LevelSummary(level)
        self.levels.append(s)
        self.levels.sort(key=lambda x: x.level)
        return s

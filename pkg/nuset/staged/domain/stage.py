"""段階的ビルダーのステージと依存束"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple


class Stage(Enum):
    """build_level のステージ（値は (番号, 名前)。番号順に実行する）"""

    # 仕様: 既存の frame^{m,·} が揃っていること
    FRAME_SPEC = (1, "FRAME")
    # 仕様: painting^{m,p} の定義域 frame^{m,p} を宣言
    PAINTING_SPEC = (2, "PAINTING")
    # E_m を受け入れ、frame^{m+1,·} と restr_frame^{m,·} (q=0) を相互に構築
    FRAME_AND_RESTR_FRAME = (3, "frame+restr_FRAME")
    # painting^{m,p} を p = m から 0 へ向かって具体化
    PAINTING = (4, "painting")
    # 仕様: restr_painting^{m−1,p} の定義域を宣言
    RESTR_PAINTING_SPEC = (5, "restr_PAINTING")
    # restr_frame^{m,·} の全表と coh_frame^{m−1,·} のインデックス集合
    RESTR_FRAME_AND_COH_FRAME = (6, "restr_frame+coh_FRAME")
    # restr_painting^{m−1,·} の全表
    RESTR_PAINTING = (7, "restr_painting")
    # 仕様: coh_painting^{m−2,·} のインデックス集合
    COH_PAINTING_SPEC = (8, "coh_PAINTING")
    # coh_frame^{m−1,·} の証明書（2次の整合性は静的な注記のみ）
    COH_FRAME = (9, "coh_frame")
    # coh_painting^{m−2,·} の証明書
    COH_PAINTING = (10, "coh_painting")

    @property
    def ordinal(self) -> int:
        return self.value[0]

    @property
    def title(self) -> str:
        return self.value[1]

    @property
    def label(self) -> str:
        """StageError や trace に載せる名前（例: "stage 3 frame+restr_FRAME"）"""
        return f"stage {self.ordinal} {self.title}"


class DepsKind(Enum):
    """ステージが消費する依存束（前の束を包含しながら大きくなる）"""

    RESTR = "DepsRestr"
    FULL_RESTR = "DepsFullRestr"
    COH = "DepsCoh"
    FULL_COH = "DepsFullCoh"
    COH2 = "DepsCoh2"
    FULL_COH2 = "DepsFullCoh2"


# 依存束ごとのコンテキスト項目（包含関係で並ぶ）
_RESTR_ENTRIES = ("bundle", "E", "frame_spec", "painting_spec")
_FULL_RESTR_ENTRIES = _RESTR_ENTRIES + ("frames_next", "restr_frame_base", "painting_memo")
_COH_ENTRIES = _FULL_RESTR_ENTRIES + ("paintings", "restr_painting_spec")
_FULL_COH_ENTRIES = _COH_ENTRIES + ("restr_frame", "coh_frame_spec")
_COH2_ENTRIES = _FULL_COH_ENTRIES + ("restr_painting", "coh_painting_spec")
_FULL_COH2_ENTRIES = _COH2_ENTRIES + ("coh_frame",)

DEPS_ENTRIES: Dict[DepsKind, Tuple[str, ...]] = {
    DepsKind.RESTR: _RESTR_ENTRIES,
    DepsKind.FULL_RESTR: _FULL_RESTR_ENTRIES,
    DepsKind.COH: _COH_ENTRIES,
    DepsKind.FULL_COH: _FULL_COH_ENTRIES,
    DepsKind.COH2: _COH2_ENTRIES,
    DepsKind.FULL_COH2: _FULL_COH2_ENTRIES,
}


@dataclass(frozen=True)
class DepsBundle:
    """ステージに渡す依存束の読み取り専用ビュー

    Attributes:
        kind: 束の種類（仕様ステージの小さな入力なら None）
        level: 受け入れ中のファミリーのレベル m
        entries: 項目名 → 値
    """
    kind: Optional[DepsKind]
    level: int
    entries: Dict[str, object] = field(default_factory=dict, hash=False)

    def __getitem__(self, name: str):
        return self.entries[name]


@dataclass(frozen=True)
class StageTrace:
    """1ステージ分の実行記録

    Attributes:
        stage: ステージ
        level: 受け入れたファミリーのレベル m
        ranks: 扱ったランクの範囲 (lo, hi)。対象がなければ None
        sizes: 表の名前 → 要素数
        note: 補足
    """
    stage: Stage
    level: int
    ranks: Optional[Tuple[int, int]] = None
    sizes: Tuple[Tuple[str, int], ...] = ()
    note: str = ""

    def line(self) -> str:
        """ログ・--trace 用の1行

        Examples:
            >>> StageTrace(Stage.PAINTING, 1, (0, 1), (("painting^1", 8),)).line()
            'stage 4 painting | level 1 | ranks [0,1] | painting^1=8'
        """
        ranks = "-" if self.ranks is None else f"[{self.ranks[0]},{self.ranks[1]}]"
        sizes = " ".join(f"{name}={size}" for name, size in self.sizes) or "-"
        text = f"{self.stage.label} | level {self.level} | ranks {ranks} | {sizes}"
        if self.note:
            text = f"{text} | {self.note}"
        return text

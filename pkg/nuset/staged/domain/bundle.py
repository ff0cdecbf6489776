"""段階的に構築したレベル束

クラス一覧:
    - StageBundle: E_0..E_{k−1} を受け入れた時点の6種類の表
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

from ...concrete.domain.nuset import LevelFamily, TruncatedNuSet
from ...shared.domain.errors import IndexRangeError
from ...shared.domain.values import FrameValue, PaintingValue
from .stage import StageTrace

RankKey = Tuple[int, int]
FrameTable = Dict[str, FrameValue]
PaintingTable = Dict[str, Dict[str, PaintingValue]]
RestrFrameTable = Dict[Tuple[str, int, int], str]
RestrPaintingTable = Dict[Tuple[str, str, int, int], str]


@dataclass
class StageBundle:
    """レベル k の束（ファミリー E_0..E_{k−1} を受け入れ済み）

    表のキー (n, p) は対象側のレベルとランク。閉じた束（最後のレベルを
    先読みせずに作ったもの）では frame^{k,·}・restr_frame^{k−1,·}・
    coh_frame^{k−2,·} がなく、各上限が1つ下がる。

    Attributes:
        nu: アリティ
        level: 受け入れたファミリー数 k
        families: E_0..E_{k−1}
        frames: (n, p) → frame^{n,p}（キー順、n ≤ k）
        paintings: (n, p) → フレームキー → painting^{n,p}(d)（n ≤ k−1）
        restr_frame: (n, p) → (d, q, ε) → restr^{n,p}_{frame,q,ε}(d)（d ∈ frame^{n+1,p}, n ≤ k−1）
        restr_painting: (n, p) → (d, c, q, ε) → restr^{n,p}_{painting,q,ε}(c)（c ∈ painting^{n+1,p}(d), n ≤ k−2）
        coh_frame: (n, p) → frame 整合性の証明書（d ∈ frame^{n+2,p}, n ≤ k−2）
        coh_painting: (n, p) → painting 整合性の証明書（c ∈ painting^{n+2,p}, n ≤ k−3）
        notes: 静的な注記
        trace: ステージの実行記録（等価比較には含めない）
    """
    nu: int
    level: int
    families: Tuple[LevelFamily, ...] = ()
    frames: Dict[RankKey, FrameTable] = field(default_factory=dict)
    paintings: Dict[RankKey, PaintingTable] = field(default_factory=dict)
    restr_frame: Dict[RankKey, RestrFrameTable] = field(default_factory=dict)
    restr_painting: Dict[RankKey, RestrPaintingTable] = field(default_factory=dict)
    coh_frame: Dict[RankKey, bool] = field(default_factory=dict)
    coh_painting: Dict[RankKey, bool] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()
    trace: Tuple[StageTrace, ...] = field(default=(), compare=False)

    def frame_table(self, n: int, p: int) -> FrameTable:
        try:
            return self.frames[(n, p)]
        except KeyError:
            raise IndexRangeError(f"frame^{n},{p} is not built at bundle level {self.level}") from None

    def painting_table(self, n: int, p: int) -> PaintingTable:
        try:
            return self.paintings[(n, p)]
        except KeyError:
            raise IndexRangeError(f"painting^{n},{p} is not built at bundle level {self.level}") from None

    def fullframe_keys(self, n: int) -> Tuple[str, ...]:
        """fullframeⁿ のキー（キー順）"""
        return tuple(self.frame_table(n, n))

    @property
    def is_open(self) -> bool:
        """次のファミリーを受け入れられるか（fullframe^k の表がある）"""
        return (self.level, self.level) in self.frames

    @property
    def certificates_hold(self) -> bool:
        return all(self.coh_frame.values()) and all(self.coh_painting.values())

    def table_sizes(self) -> Dict[str, int]:
        """表の種類ごとの項目数"""
        return {
            "frame": sum(len(t) for t in self.frames.values()),
            "painting": sum(len(cs) for t in self.paintings.values() for cs in t.values()),
            "restr_frame": sum(len(t) for t in self.restr_frame.values()),
            "restr_painting": sum(len(t) for t in self.restr_painting.values()),
            "coh_frame": len(self.coh_frame),
            "coh_painting": len(self.coh_painting),
        }

    def to_nuset(self) -> TruncatedNuSet:
        """受け入れたファミリーを TruncatedNuSet として返す"""
        return TruncatedNuSet(self.nu, self.families)

"""記号的な整合性検査の結果"""

from dataclasses import dataclass, field
from typing import Dict, List

from ...shared.domain.indices import CohIndex
from .expr import TermExpr


@dataclass(frozen=True)
class CohReflReport:
    """合成の両辺の正規形を比べた結果

    Attributes:
        nu, n, p: 結果側のアリティ・レベル・ランク
        coh: (q, r, ε, ω)
        kind: "frame" または "painting"
        lhs: restr_{q,ε} ∘ restr_{r,ω} の正規形
        rhs: restr_{r,ω} ∘ restr_{q+1,ε} の正規形
        mismatches: 両辺が食い違う位置のパス（例: "fst.snd.0"）
    """
    nu: int
    n: int
    p: int
    coh: CohIndex
    kind: str
    lhs: TermExpr
    rhs: TermExpr
    mismatches: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.mismatches

    def describe(self) -> str:
        c = self.coh
        head = f"coh_{self.kind}^{self.n},{self.p} q={c.q} r={c.r} eps={c.eps} omega={c.omega} (nu={self.nu})"
        if self.holds:
            return f"{head}: refl"
        return f"{head}: differs at {', '.join(self.mismatches)}"


@dataclass
class CohSweepSummary:
    """全インデックスの一括検査の集計"""
    nu: int
    max_level: int
    checked: int = 0
    failures: List[CohReflReport] = field(default_factory=list)
    by_level: Dict[int, int] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return not self.failures

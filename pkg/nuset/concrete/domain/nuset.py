"""有限ν-集合のドメインモデル

クラス一覧:
    - LevelFamily: 具体的な E_n（全フレームのキー → 要素ラベル列）
    - TruncatedNuSet: D : νSet^{<n}（アリティ ν とレベル E_0..E_{n−1}）
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, Tuple

from ...shared.domain.errors import IndexRangeError, ShapeError
from ...shared.domain.indices import check_arity


# ============================================================================
# レベル
# ============================================================================


@dataclass(frozen=True)
class LevelFamily:
    """レベル n のファミリー E_n : fullframeⁿ → 有限集合

    Attributes:
        level: 次元 n
        fibers: 全フレームの正準キー → 要素ラベルのタプル
            - キー集合は fullframeⁿ の列挙と一致しなければならない
            - ラベル列は昇順・重複なし
            - 空のファイバーも許す

    Note:
        不変条件の検査は validate が行う（構築時には検査しない）。
    """
    level: int
    fibers: Dict[str, Tuple[str, ...]] = field(default_factory=dict, hash=False)

    def fiber(self, key: str) -> Tuple[str, ...]:
        """キー key のファイバー

        Raises:
            ShapeError: キーが存在しない場合
        """
        try:
            return self.fibers[key]
        except KeyError:
            raise ShapeError("missing fiber", key=key, level=self.level) from None

    @property
    def element_count(self) -> int:
        """全要素数（= ファイバー形式のセル数 |X_n|）"""
        return sum(len(labels) for labels in self.fibers.values())

    def labels(self) -> Iterator[Tuple[str, str]]:
        """(キー, ラベル) をキー順に列挙する"""
        for key in sorted(self.fibers):
            for label in self.fibers[key]:
                yield key, label


# ============================================================================
# 切り詰めたν-集合
# ============================================================================


@dataclass(frozen=True)
class TruncatedNuSet:
    """D : νSet^{<n}

    Attributes:
        nu: アリティ（ν=1 で拡張半単体集合、ν=2 で半立方体集合）
        levels: E_0..E_{n−1}。levels[k].level == k

    Raises:
        IndexRangeError: ν < 1（ν=0 ではレイヤーが空積になり計算が潰れる）
        ShapeError: レベル番号が 0 から連続していない場合

    Examples:
        >>> D = TruncatedNuSet(nu=2, levels=(LevelFamily(0, {"*": ("x", "y")}),))
        >>> D.depth
        1
    """
    nu: int
    levels: Tuple[LevelFamily, ...] = ()

    def __post_init__(self):
        check_arity(self.nu)
        object.__setattr__(self, "levels", tuple(self.levels))
        for k, family in enumerate(self.levels):
            if family.level != k:
                raise ShapeError(f"level {family.level} found at position {k}", level=family.level)

    @property
    def depth(self) -> int:
        """レベル数 n（E_0..E_{n−1}）"""
        return len(self.levels)

    def family(self, level: int) -> LevelFamily:
        """E_level を返す"""
        if level < 0 or level >= self.depth:
            raise IndexRangeError(f"level {level} not in [0, {self.depth})")
        return self.levels[level]

    def truncate(self, depth: int) -> "TruncatedNuSet":
        """E_0..E_{depth−1} だけを残す"""
        return TruncatedNuSet(self.nu, self.levels[:depth])

    def extend(self, family: LevelFamily) -> "TruncatedNuSet":
        """次のレベル E_n を追加する（検証はしない）"""
        return TruncatedNuSet(self.nu, self.levels + (family,))

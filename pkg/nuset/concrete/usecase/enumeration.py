"""フレーム・レイヤー・ペインティングの列挙

責務: 有限ν-集合 D の上で frameⁿ'ᵖ, layerⁿ'ᵖ, paintingⁿ'ᵖ を完全列挙する。

【再帰】
    frame^{n,0}            = {⋆}
    frame^{n,p+1}          = {(d, l) | d ∈ frame^{n,p}, l ∈ layer^{n−1,p}(d)}
    layer^{n,p}(d)         = Π ε. painting^{n,p}(restr_frame^{n,p}_{0,ε}(d))     （d ∈ frame^{n+1,p}）
    painting^{n,n}(d)      = E_n(d)
    painting^{n,p<n}(d)    = {(l, c) | l ∈ layer^{n−1,p}(d), c ∈ painting^{n,p+1}((d, l))}

【順序とメモ化】
- 列挙結果はすべて正準キーの昇順
- (レベル, ランク) と (レベル, ランク, フレームキー) ごとにメモ化し、一度計算した
  結果は不変タプルとして共有する
- メモ表は単一スレッドで構築する。構築後の読み出しは並行で安全
"""

import itertools
from typing import Dict, List, Optional, Sequence, Tuple

from ...shared.domain.errors import IndexRangeError, ShapeError
from ...shared.domain.indices import check_rank
from ...shared.domain.values import (
    STAR,
    Extend,
    FrameValue,
    Layered,
    LayerValue,
    PaintingValue,
    Top,
    layer_key,
)
from ..domain.nuset import LevelFamily, TruncatedNuSet
from .restriction import RestrictionEvaluator


class Enumerator:
    """メモ化付きの列挙器

    Attributes:
        nu: アリティ
        families: E_0..E_{k−1}
        evaluator: 制限の評価器（差し替え可能）

    Note:
        frame^{n,·} には n ≤ k、painting^{n,·} には n ≤ k−1 が必要。
    """

    def __init__(
        self,
        nu: int,
        families: Sequence[LevelFamily],
        evaluator: Optional[RestrictionEvaluator] = None,
    ):
        self.nu = nu
        self.families = tuple(families)
        self.evaluator = evaluator or RestrictionEvaluator(nu)
        self._frames: Dict[Tuple[int, int], Tuple[FrameValue, ...]] = {}
        self._frame_keys: Dict[Tuple[int, int], frozenset] = {}
        self._layers: Dict[Tuple[int, int, str], Tuple[LayerValue, ...]] = {}
        self._paintings: Dict[Tuple[int, int, str], Tuple[PaintingValue, ...]] = {}

    @classmethod
    def of(cls, D: TruncatedNuSet, evaluator: Optional[RestrictionEvaluator] = None) -> "Enumerator":
        return cls(D.nu, D.levels, evaluator)

    # ------------------------------------------------------------------------
    # フレーム
    # ------------------------------------------------------------------------

    def frames(self, n: int, p: int) -> Tuple[FrameValue, ...]:
        """frame^{n,p} をキー順で返す"""
        check_rank(n, p)
        if n > len(self.families):
            raise IndexRangeError(f"frame^{n} needs levels 0..{n - 1}, only {len(self.families)} given")
        cached = self._frames.get((n, p))
        if cached is not None:
            return cached
        if p == 0:
            result: Tuple[FrameValue, ...] = (STAR,)
        else:
            extended = [
                Extend(d, l)
                for d in self.frames(n, p - 1)
                for l in self.layers(n - 1, p - 1, d)
            ]
            result = tuple(sorted(extended, key=lambda f: f.key))
        self._frames[(n, p)] = result
        return result

    def fullframes(self, n: int) -> Tuple[FrameValue, ...]:
        """fullframeⁿ = frame^{n,n}"""
        return self.frames(n, n)

    def frame_keys(self, n: int, p: int) -> frozenset:
        """frame^{n,p} のキー集合（所属判定用）"""
        keys = self._frame_keys.get((n, p))
        if keys is None:
            keys = frozenset(d.key for d in self.frames(n, p))
            self._frame_keys[(n, p)] = keys
        return keys

    # ------------------------------------------------------------------------
    # レイヤー
    # ------------------------------------------------------------------------

    def layers(self, n: int, p: int, d: FrameValue) -> Tuple[LayerValue, ...]:
        """layer^{n,p}(d)（d ∈ frame^{n+1,p}）をキー順で返す"""
        memo_key = (n, p, d.key)
        cached = self._layers.get(memo_key)
        if cached is not None:
            return cached
        choices = [
            self.paintings(n, p, self.evaluator.restr_frame(n, p, 0, eps, d))
            for eps in range(self.nu)
        ]
        result = tuple(sorted(itertools.product(*choices), key=layer_key))
        self._layers[memo_key] = result
        return result

    # ------------------------------------------------------------------------
    # ペインティング
    # ------------------------------------------------------------------------

    def paintings(self, n: int, p: int, d: FrameValue) -> Tuple[PaintingValue, ...]:
        """painting^{n,p}(d)（d ∈ frame^{n,p}）をキー順で返す

        Raises:
            ShapeError: p = n で d のファイバーが E_n にない場合
        """
        check_rank(n, p)
        if n >= len(self.families):
            raise IndexRangeError(f"painting^{n} needs level {n}, only {len(self.families)} given")
        memo_key = (n, p, d.key)
        cached = self._paintings.get(memo_key)
        if cached is not None:
            return cached
        if p == n:
            result: Tuple[PaintingValue, ...] = tuple(Top(x) for x in self.families[n].fiber(d.key))
        else:
            built = [
                Layered(l, c)
                for l in self.layers(n - 1, p, d)
                for c in self.paintings(n, p + 1, Extend(d, l))
            ]
            result = tuple(sorted(built, key=lambda c: c.key))
        self._paintings[memo_key] = result
        return result

    def painting_keys(self, n: int, p: int, d: FrameValue) -> frozenset:
        return frozenset(c.key for c in self.paintings(n, p, d))

    def cells(self, n: int) -> List[PaintingValue]:
        """painting^{n,0}(⋆)（全ペインティング = ファイバー形式の n-セル）"""
        return list(self.paintings(n, 0, STAR))


# ============================================================================
# 関数API
# ============================================================================


def enumerate_frames(D: TruncatedNuSet, n: int, p: int) -> List[FrameValue]:
    """frame^{n,p} を正準キー順に列挙する

    Examples:
        >>> D = TruncatedNuSet(2, (LevelFamily(0, {"*": ("x", "y")}),))
        >>> len(enumerate_frames(D, 1, 1))
        4
    """
    return list(Enumerator.of(D).frames(n, p))


def enumerate_fullframe(D: TruncatedNuSet, n: int) -> List[FrameValue]:
    """fullframeⁿ = frame^{n,n}"""
    return enumerate_frames(D, n, n)


def enumerate_layers(D: TruncatedNuSet, n: int, p: int, d: FrameValue) -> List[LayerValue]:
    """layer^{n,p}(d) を列挙する（d ∈ frame^{n+1,p}）"""
    return list(Enumerator.of(D).layers(n, p, d))


def enumerate_paintings(
    D: TruncatedNuSet,
    E: Optional[LevelFamily],
    n: int,
    p: int,
    d: FrameValue,
) -> List[PaintingValue]:
    """painting^{n,p}(d) を列挙する

    Args:
        D: レベル 0..n−1 を含む ν-集合
        E: レベル n のファミリー。None なら D.levels[n] を使う
        n: レベル
        p: ランク
        d: frame^{n,p} の要素

    Raises:
        ShapeError: d が frame^{n,p} に属さない場合
    """
    families = D.levels[:n] + ((E,) if E is not None else D.levels[n:n + 1])
    enumerator = Enumerator(D.nu, families)
    if d.key not in enumerator.frame_keys(n, p):
        raise ShapeError(f"not a frame of rank {p}", key=d.key, level=n)
    return list(enumerator.paintings(n, p, d))

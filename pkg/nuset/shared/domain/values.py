"""フレーム・レイヤー・ペインティングの値（有限の木）

責務: frameⁿ'ᵖ, layerⁿ'ᵖ, paintingⁿ'ᵖ の住人を不変な木として表現する。

【木の形】
- FrameValue    = Star | Extend(prefix: FrameValue, layer: LayerValue)
- LayerValue    = ν個の PaintingValue のタプル（方向 ε ごと）
- PaintingValue = Top(label) | Layered(layer: LayerValue, rest: PaintingValue)

【正準キー】
    *          Star
    (f;L)      Extend
    [p0|p1]    LayerValue
    {L;P}      Layered
    #label     Top
空白なし。ラベルは [A-Za-z0-9_]+。キーは木に対して単射で、列挙の順序はキーの
文字列順とする。
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Tuple, Union

from .errors import ShapeError


# ============================================================================
# ペインティング
# ============================================================================


@dataclass(frozen=True)
class Top:
    """ランク p = n のペインティング: ファイバー E_n(d) の要素

    Attributes:
        label: 要素ラベル
    """
    label: str

    @cached_property
    def key(self) -> str:
        return f"#{self.label}"


@dataclass(frozen=True)
class Layered:
    """ランク p < n のペインティング: 1枚のレイヤーと残りのペインティング

    Attributes:
        layer: ランク p のレイヤー
        rest: ランク p+1 のペインティング
    """
    layer: "LayerValue"
    rest: "PaintingValue"

    @cached_property
    def key(self) -> str:
        return f"{{{layer_key(self.layer)};{self.rest.key}}}"


PaintingValue = Union[Top, Layered]
LayerValue = Tuple[PaintingValue, ...]


# ============================================================================
# フレーム
# ============================================================================


@dataclass(frozen=True)
class Star:
    """ランク0のフレーム（unit の唯一の住人）"""

    @property
    def key(self) -> str:
        return "*"

    @property
    def rank(self) -> int:
        return 0


@dataclass(frozen=True)
class Extend:
    """ランク p+1 のフレーム: ランク p のフレームとその上のレイヤー

    Attributes:
        prefix: ランク p のフレーム
        layer: prefix 上のレイヤー
    """
    prefix: "FrameValue"
    layer: LayerValue

    @cached_property
    def key(self) -> str:
        return f"({self.prefix.key};{layer_key(self.layer)})"

    @cached_property
    def rank(self) -> int:
        return self.prefix.rank + 1


FrameValue = Union[Star, Extend]

STAR = Star()


def layer_key(layer: LayerValue) -> str:
    """レイヤーの正準キー

    Examples:
        >>> layer_key((Top("a"), Top("b")))
        '[#a|#b]'
    """
    return "[" + "|".join(c.key for c in layer) + "]"


# ============================================================================
# 補助関数
# ============================================================================


def painting_depth(c: PaintingValue) -> int:
    """ペインティングのレイヤー数 (n − p)"""
    depth = 0
    while isinstance(c, Layered):
        depth += 1
        c = c.rest
    return depth


def top_label(c: PaintingValue) -> str:
    """ペインティングの一番上の要素ラベル"""
    while isinstance(c, Layered):
        c = c.rest
    return c.label


def frame_of(c: PaintingValue, base: FrameValue = STAR) -> Tuple[FrameValue, str]:
    """全ペインティングを (全フレーム, 要素ラベル) に分解する

    base 上のペインティングのレイヤーを順に base に積み上げる。

    Examples:
        >>> d, x = frame_of(Layered((Top("a"), Top("b")), Top("e")))
        >>> d.key, x
        ('(*;[#a|#b])', 'e')
    """
    d = base
    while isinstance(c, Layered):
        d = Extend(d, c.layer)
        c = c.rest
    return d, c.label


def painting_of(d: FrameValue, label: str, rank: int = 0) -> PaintingValue:
    """全フレーム d と要素ラベルから、ランク rank のペインティングを組み立てる

    frame_of の逆。d のランク rank より上のレイヤーを Layered に巻き直す。
    """
    layers = []
    while isinstance(d, Extend) and d.rank > rank:
        layers.append(d.layer)
        d = d.prefix
    c: PaintingValue = Top(label)
    for layer in layers:
        c = Layered(layer, c)
    return c


def strip_layers(c: PaintingValue, count: int) -> PaintingValue:
    """ランク0のペインティングから下位 count 枚のレイヤーを取り除く"""
    for _ in range(count):
        if not isinstance(c, Layered):
            raise ShapeError(f"painting has fewer than {count} layers", key=c.key)
        c = c.rest
    return c

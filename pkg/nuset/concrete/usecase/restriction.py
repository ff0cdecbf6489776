"""制限（面）の評価

責務: 値の木に対する restr_frame / restr_layer / restr_painting を構造的再帰で計算する。

【定義】（q はランクから測った方向）
    restr_frame^{n,0}_{q,ε}(⋆)                = ⋆
    restr_frame^{n,p+1}_{q,ε}(d, l)           = (restr_frame^{n,p}_{q+1,ε}(d), restr_layer^{n−1,p}_{q,ε}(l))
    restr_layer^{n,p}_{q,ε}(l)                = λω. restr_painting^{n,p}_{q,ε}(l_ω)
    restr_painting^{n,p}_{0,ε}(l, −)          = l_ε
    restr_painting^{n,p}_{q+1,ε}(l, c)        = (restr_layer^{n−1,p}_{q,ε}(l), restr_painting^{n,p+1}_{q,ε}(c))

restr^{n,p} はレベル n+1 の値をレベル n の値に写す。ファミリー E は参照しない。

【差し替え】
RestrictionEvaluator の各メソッドは self 経由で再帰するため、サブクラスで
1箇所を上書きすると再帰全体に反映される（変異テストで使う）。
"""

from ...shared.domain.errors import ShapeError
from ...shared.domain.indices import check_face
from ...shared.domain.values import (
    STAR,
    Extend,
    FrameValue,
    Layered,
    LayerValue,
    PaintingValue,
    Star,
)


class RestrictionEvaluator:
    """制限演算子の評価器

    Attributes:
        nu: アリティ

    Examples:
        >>> from nuset.shared.domain.values import Top
        >>> ev = RestrictionEvaluator(nu=2)
        >>> edge = Layered((Top("a"), Top("b")), Top("e"))
        >>> ev.restr_painting(0, 0, 0, 1, edge)
        Top(label='b')
    """

    def __init__(self, nu: int):
        self.nu = nu

    def restr_frame(self, n: int, p: int, q: int, eps: int, d: FrameValue) -> FrameValue:
        """restr^{n,p}_{frame,q,ε}: frame^{n+1,p} → frame^{n,p}"""
        check_face(n, p, q, eps, self.nu)
        if p == 0:
            if not isinstance(d, Star):
                raise ShapeError("rank-0 frame expected", key=d.key, level=n + 1)
            return STAR
        if not isinstance(d, Extend):
            raise ShapeError(f"rank-{p} frame expected", key=d.key, level=n + 1)
        return Extend(
            self.restr_frame(n, p - 1, q + 1, eps, d.prefix),
            self.restr_layer(n - 1, p - 1, q, eps, d.layer),
        )

    def restr_layer(self, n: int, p: int, q: int, eps: int, layer: LayerValue) -> LayerValue:
        """restr^{n,p}_{layer,q,ε}: layer^{n+1,p} → layer^{n,p}"""
        if len(layer) != self.nu:
            raise ShapeError(f"layer of length {len(layer)} for arity {self.nu}", level=n + 1)
        return tuple(self.restr_painting(n, p, q, eps, c) for c in layer)

    def restr_painting(self, n: int, p: int, q: int, eps: int, c: PaintingValue) -> PaintingValue:
        """restr^{n,p}_{painting,q,ε}: painting^{n+1,p} → painting^{n,p}"""
        check_face(n, p, q, eps, self.nu)
        if not isinstance(c, Layered):
            # q ≤ n−p より、レベル n+1 のランク p ≤ n のペインティングは必ず Layered
            raise ShapeError(f"rank-{p} painting at level {n + 1} cannot be a top element", key=c.key)
        if q == 0:
            if len(c.layer) != self.nu:
                raise ShapeError(f"layer of length {len(c.layer)} for arity {self.nu}", key=c.key)
            return c.layer[eps]
        return Layered(
            self.restr_layer(n - 1, p, q - 1, eps, c.layer),
            self.restr_painting(n, p + 1, q - 1, eps, c.rest),
        )


# ============================================================================
# 関数API
# ============================================================================


def eval_restr_frame(D, n: int, p: int, q: int, eps: int, d: FrameValue) -> FrameValue:
    """D の上で restr^{n,p}_{frame,q,ε}(d) を評価する

    Args:
        D: TruncatedNuSet（アリティの取得に使う）
        n: 結果のレベル
        p: ランク
        q, eps: 面インデックス
        d: レベル n+1 のランク p フレーム

    Returns:
        レベル n のランク p フレーム
    """
    return RestrictionEvaluator(D.nu).restr_frame(n, p, q, eps, d)


def eval_restr_painting(D, E, n: int, p: int, q: int, eps: int, d: FrameValue, c: PaintingValue) -> PaintingValue:
    """restr^{n,p}_{painting,q,ε}(c) を評価する

    c は d 上のレベル n+1 のペインティング。結果は
    eval_restr_frame(D, n, p, q, eps, d) 上のレベル n のペインティング。
    E（レベル n+1 のファミリー）と d は値の再帰には現れない。
    """
    evaluator = RestrictionEvaluator(D.nu)
    if d.rank != p:
        raise ShapeError(f"frame of rank {d.rank} given for rank {p}", key=d.key)
    return evaluator.restr_painting(n, p, q, eps, c)

"""テスト共通のフィクスチャ

小さな手組みのインスタンスと、シード付きで生成したインスタンスを用意する。
最後のレベルは閉じて作るので、ν ≤ 2・深さ3・ファイバー3まで数秒で構築できる。
"""

from typing import Callable, Dict, Tuple

import pytest

from nuset.concrete.domain.nuset import LevelFamily, TruncatedNuSet
from nuset.concrete.usecase.enumeration import Enumerator
from nuset.generator.domain.generator_config import GeneratorConfig
from nuset.generator.usecase.generate_instance import generate_instance

# ν=2, E_0 = {a, b} 上の4本の辺（キー → ラベル）
SQUARE_EDGES: Dict[str, Tuple[str, ...]] = {
    "(*;[#a|#a])": ("aa",),
    "(*;[#a|#b])": ("ab",),
    "(*;[#b|#a])": ("ba",),
    "(*;[#b|#b])": ("bb",),
}

# ファイバーの大きさが非対称（a と b が精密化で区別される）
ASYMMETRIC_EDGES: Dict[str, Tuple[str, ...]] = {
    "(*;[#a|#a])": ("e",),
    "(*;[#a|#b])": ("f", "g"),
    "(*;[#b|#a])": (),
    "(*;[#b|#b])": ("h",),
}


def _fill_level(D: TruncatedNuSet, prefix: str) -> TruncatedNuSet:
    """D の次の全フレームそれぞれに要素を1つずつ置く"""
    level = D.depth
    keys = [d.key for d in Enumerator.of(D).fullframes(level)]
    return D.extend(LevelFamily(level, {key: (f"{prefix}{i:02d}",) for i, key in enumerate(keys)}))


@pytest.fixture
def square_nuset() -> TruncatedNuSet:
    """ν=2、頂点 a, b とその上の4本の辺（深さ2）"""
    return TruncatedNuSet(2, (LevelFamily(0, {"*": ("a", "b")}), LevelFamily(1, dict(SQUARE_EDGES))))


@pytest.fixture
def square_tower(square_nuset: TruncatedNuSet) -> TruncatedNuSet:
    """square_nuset の16個の正方形の境界それぞれに面を1つ張ったもの（深さ3）"""
    return _fill_level(square_nuset, "s")


@pytest.fixture
def asymmetric_nuset() -> TruncatedNuSet:
    """ν=2、ファイバーの大きさが 1, 2, 0, 1 の辺（深さ2）"""
    return TruncatedNuSet(2, (LevelFamily(0, {"*": ("a", "b")}), LevelFamily(1, dict(ASYMMETRIC_EDGES))))


@pytest.fixture
def singleton_tower() -> Callable[[int, int, int], TruncatedNuSet]:
    """(ν, |E_0|, 深さ) → E_0 以外のファイバーがすべて1点のインスタンス"""

    def build(nu: int, vertices: int, depth: int) -> TruncatedNuSet:
        D = TruncatedNuSet(nu, (LevelFamily(0, {"*": tuple(f"v{i}" for i in range(vertices))}),))
        for level in range(1, depth):
            D = _fill_level(D, f"c{level}_")
        return D

    return build


@pytest.fixture
def generated() -> Callable[..., TruncatedNuSet]:
    """GeneratorConfig のキーワードから生成する"""

    def build(nu: int, depth: int, max_fiber: int = 2, seed: int = 42) -> TruncatedNuSet:
        return generate_instance(GeneratorConfig(nu=nu, depth=depth, max_fiber=max_fiber, seed=seed))

    return build

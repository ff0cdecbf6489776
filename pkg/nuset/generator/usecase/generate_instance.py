"""シード付きランダムインスタンス生成

責務: 妥当な TruncatedNuSet をシードから決定的に生成する。

【アルゴリズム】
    rng = numpy.random.Generator(PCG64(seed))
    for level k in 0..depth−1:
        生成済みの E_0..E_{k−1} に対して全フレームをキー順に列挙し、
        各ファイバーのサイズを rng.integers(1, max_fiber + 1) でこの順に引く
        ラベルはレベル内で一意な e{k}_{i:04d}（i は生成順の通し番号）

ラベルの辞書順 = 生成順なので、ファイバーは生成したまま整列済み。
"""

import logging
from typing import Dict, List, Tuple

import numpy as np

from ...concrete.domain.nuset import LevelFamily, TruncatedNuSet
from ...concrete.usecase.enumeration import Enumerator
from ..domain.generator_config import GeneratorConfig

logger = logging.getLogger(__name__)


def element_label(level: int, index: int) -> str:
    """レベル内で一意な要素ラベル

    Examples:
        >>> element_label(1, 7)
        'e1_0007'
    """
    return f"e{level}_{index:04d}"


def generate_family(
    enumerator: Enumerator,
    level: int,
    rng: np.random.Generator,
    max_fiber: int,
) -> LevelFamily:
    """生成済みのレベルの上に E_level を1つ生成する"""
    fibers: Dict[str, Tuple[str, ...]] = {}
    counter = 0
    for d in enumerator.fullframes(level):
        size = int(rng.integers(1, max_fiber + 1))
        fibers[d.key] = tuple(sorted(element_label(level, counter + i) for i in range(size)))
        counter += size
    return LevelFamily(level, fibers)


def generate_instance(config: GeneratorConfig) -> TruncatedNuSet:
    """config に従って ν-集合を生成する

    Examples:
        >>> D = generate_instance(GeneratorConfig(nu=2, depth=2, max_fiber=1, seed=0))
        >>> [D.family(k).element_count for k in range(D.depth)]
        [1, 1]
    """
    rng = np.random.Generator(np.random.PCG64(config.seed))
    families: List[LevelFamily] = []
    for level in range(config.depth):
        enumerator = Enumerator(config.nu, families)
        family = generate_family(enumerator, level, rng, config.max_fiber)
        families.append(family)
        logger.info(
            "level %d: %d fullframes, %d elements", level, len(family.fibers), family.element_count,
        )
    return TruncatedNuSet(config.nu, tuple(families))

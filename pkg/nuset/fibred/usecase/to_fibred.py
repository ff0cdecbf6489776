"""インデックス形式 → ファイバー形式

    X_n        = Σ d : fullframeⁿ. E_n(d)     （全ペインティング painting^{n,0}(⋆)）
    ∂_{q,ε}(c) = restr^{n−1,0}_{painting,q,ε}(c)

セルの並びは「全フレームのキー順 → ファイバー内のラベル順」。
"""

import logging
from typing import Dict, List, Optional, Tuple

from ...concrete.domain.nuset import TruncatedNuSet
from ...concrete.usecase.enumeration import Enumerator
from ...concrete.usecase.restriction import RestrictionEvaluator
from ...concrete.usecase.validation import validate
from ...shared.domain.errors import FibredError
from ...shared.domain.values import PaintingValue, painting_of, top_label
from ..domain.fibred_set import FaceMap, FibredSet

logger = logging.getLogger(__name__)


def total_cells(D: TruncatedNuSet, n: int, enumerator: Optional[Enumerator] = None) -> List[PaintingValue]:
    """レベル n の全ペインティングを、全フレームのキー順・ファイバー順で並べる"""
    enumerator = enumerator or Enumerator.of(D)
    family = D.family(n)
    return [painting_of(d, x) for d in enumerator.fullframes(n) for x in family.fiber(d.key)]


def cell_ids(n: int, cells: List[PaintingValue]) -> List[str]:
    """セルID: 最上段のラベルが次元内で一意ならそのまま、そうでなければ c{n}_{i}

    Examples:
        >>> from nuset.shared.domain.values import Top
        >>> cell_ids(0, [Top("x"), Top("y")])
        ['x', 'y']
        >>> cell_ids(1, [Top("x"), Top("x")])
        ['c1_0', 'c1_1']
    """
    labels = [top_label(c) for c in cells]
    if len(set(labels)) == len(labels):
        return labels
    width = len(str(max(len(cells) - 1, 0)))
    return [f"c{n}_{i:0{width}d}" for i in range(len(cells))]


def to_fibred(D: TruncatedNuSet, evaluator: Optional[RestrictionEvaluator] = None) -> FibredSet:
    """D をファイバー形式にする

    Raises:
        FibredError: D が妥当でない

    Examples:
        >>> to_fibred(TruncatedNuSet(nu=2)).depth
        0
    """
    report = validate(D, evaluator)
    if not report.is_valid:
        first = report.violations[0]
        raise FibredError(f"cannot export an invalid nu-set: {first.describe()}", cell=first.key, dim=first.level)

    evaluator = evaluator or RestrictionEvaluator(D.nu)
    enumerator = Enumerator.of(D, evaluator)
    cells: List[Tuple[str, ...]] = []
    faces: List[FaceMap] = []
    previous: Dict[str, str] = {}
    for n in range(D.depth):
        values = total_cells(D, n, enumerator)
        ids = cell_ids(n, values)
        by_key = {c.key: cid for c, cid in zip(values, ids)}
        face_map: FaceMap = {}
        if n >= 1:
            for c, cid in zip(values, ids):
                for q in range(n):
                    for eps in range(D.nu):
                        face_map[(cid, q, eps)] = previous[evaluator.restr_painting(n - 1, 0, q, eps, c).key]
        cells.append(tuple(ids))
        faces.append(face_map)
        previous = by_key
        logger.debug("dimension %d: %d cells, %d faces", n, len(ids), len(face_map))
    return FibredSet(D.nu, tuple(cells), tuple(faces))


def face_count(X: FibredSet, n: int, cell: str) -> int:
    """cell の面の数（to_fibred の出力では ν·n）"""
    return len(X.faces_of(n, cell))
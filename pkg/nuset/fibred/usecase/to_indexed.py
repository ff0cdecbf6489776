"""ファイバー形式 → インデックス形式

責務: 各セルの境界から全ペインティング P(x) を組み立て、その全フレームを
      ファイバーのキーにする。

【境界の組み立て】
    P(x) = {L_0; {L_1; … {L_{n−1}; #x}}}
    L_p[ε] = P(∂_{p,ε} x) から下位 p 枚のレイヤーを取り除いたもの

深い成分は面の面から再帰的に決まるので、組み立て後に
restr^{n−1,0}_{painting,q,ε}(P(x)) = P(∂_{q,ε} x) をすべての (q, ε) で照合する。
"""

import logging
from typing import Dict, List, Optional

from ...concrete.domain.nuset import LevelFamily, TruncatedNuSet
from ...concrete.usecase.enumeration import Enumerator
from ...concrete.usecase.restriction import RestrictionEvaluator
from ...concrete.usecase.validation import validate
from ...shared.domain.errors import FibredError, NuSetError
from ...shared.domain.values import Layered, PaintingValue, Top, frame_of, strip_layers
from ...shared.utils.canonical_key import is_valid_label
from ..domain.fibred_set import FibredSet
from .identities import check_identities

logger = logging.getLogger(__name__)


def assemble_painting(
    X: FibredSet,
    n: int,
    cell: str,
    below: Dict[str, PaintingValue],
) -> PaintingValue:
    """セルの全ペインティング P(x) を組み立てる

    Args:
        X: ファイバー形式
        n: セルの次元
        cell: セルID
        below: 次元 n−1 のセル → P

    Raises:
        FibredError: 面の全ペインティングが浅すぎる
    """
    layers = []
    for p in range(n):
        try:
            layers.append(tuple(
                strip_layers(below[X.faces[n][(cell, p, eps)]], p) for eps in range(X.nu)
            ))
        except NuSetError as e:
            raise FibredError(f"boundary assembly failed at layer {p}: {e}", cell=cell, dim=n) from e
    c: PaintingValue = Top(cell)
    for layer in reversed(layers):
        c = Layered(layer, c)
    return c


def to_indexed(X: FibredSet, evaluator: Optional[RestrictionEvaluator] = None) -> TruncatedNuSet:
    """X をインデックス形式にする

    Raises:
        FibredError: 面の恒等式の違反、境界の組み立ての不整合、ラベル文法の違反
            （問題のセルを添える）

    Examples:
        >>> D = to_indexed(FibredSet(2, (("pt",),)))
        >>> D.family(0).fibers
        {'*': ('pt',)}
    """
    report = check_identities(X)
    if not report.holds:
        first = report.violations[0]
        raise FibredError(f"face identities violated: {first.kind}: {first.detail}", cell=first.cell, dim=first.dim)

    evaluator = evaluator or RestrictionEvaluator(X.nu)
    families: List[LevelFamily] = []
    below: Dict[str, PaintingValue] = {}
    for n, cells in enumerate(X.cells):
        current: Dict[str, PaintingValue] = {}
        fibers: Dict[str, List[str]] = {}
        for cell in cells:
            if not is_valid_label(cell):
                raise FibredError("cell id is not a valid label", cell=cell, dim=n)
            P = assemble_painting(X, n, cell, below)
            for q in range(n):
                for eps in range(X.nu):
                    try:
                        face = evaluator.restr_painting(n - 1, 0, q, eps, P)
                    except NuSetError as e:
                        raise FibredError(f"boundary is not well shaped: {e}", cell=cell, dim=n) from e
                    if face != below[X.faces[n][(cell, q, eps)]]:
                        raise FibredError(
                            f"boundary assembly inconsistent: face q={q} eps={eps} does not match its cell",
                            cell=cell, dim=n,
                        )
            current[cell] = P
            d, _ = frame_of(P)
            fibers.setdefault(d.key, []).append(cell)

        enumerator = Enumerator(X.nu, families, evaluator)
        fullframes = [d.key for d in enumerator.fullframes(n)]
        stray = sorted(set(fibers) - set(fullframes))
        if stray:
            culprit = fibers[stray[0]][0]
            raise FibredError(f"boundary {stray[0]} is not a fullframe", cell=culprit, dim=n)
        families.append(LevelFamily(n, {key: tuple(sorted(fibers.get(key, ()))) for key in fullframes}))
        below = current
        logger.debug("dimension %d: %d cells in %d fibers", n, len(cells), len(fullframes))

    D = TruncatedNuSet(X.nu, tuple(families))
    result = validate(D, evaluator)
    if not result.is_valid:
        first = result.violations[0]
        raise FibredError(f"assembled nu-set is invalid: {first.describe()}", cell=first.key, dim=first.level)
    return D

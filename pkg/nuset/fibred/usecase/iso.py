"""同型判定（正準形の比較）

責務: インデックス形式・ファイバー形式のどちらも正準形に落として比較する。

【正準形の作り方】
    1. 色の精密化: 各セルの色を「自分の色・面の色・余面の (q, ε, 色)」で
       安定するまで細分する（色はラベルに依存しない整数）
    2. 下の次元から順に、(色, 面の正準番号, 列挙順) でセルを並べて番号を振る
    3. 正準形 = 次元ごとの「各セルの面の正準番号」の列

正準形が一致すれば番号同士の対応がそのまま同型写像になる。
精密化で区別できないセルの順序は列挙順で決めるので、その範囲では
ファイバー内の順序を保つ付け替えに対してのみ完全。
"""

import logging
from collections import defaultdict
from typing import Dict, List, Optional, Tuple, Union

from ...concrete.domain.nuset import TruncatedNuSet
from ...concrete.usecase.restriction import RestrictionEvaluator
from ...shared.domain.errors import FibredError
from ..domain.fibred_set import FibredSet
from .identities import check_identities
from .to_fibred import to_fibred

logger = logging.getLogger(__name__)

Structure = Union[TruncatedNuSet, FibredSet]
CanonicalForm = Tuple[Tuple[Tuple[int, ...], ...], ...]
_Cell = Tuple[int, str]


def _as_fibred(A: Structure, evaluator: Optional[RestrictionEvaluator]) -> FibredSet:
    if isinstance(A, FibredSet):
        report = check_identities(A)
        if not report.holds:
            first = report.violations[0]
            raise FibredError(f"face identities violated: {first.kind}: {first.detail}", cell=first.cell, dim=first.dim)
        return A
    return to_fibred(A, evaluator)


def _cofaces(X: FibredSet) -> Dict[_Cell, List[Tuple[int, int, str]]]:
    table: Dict[_Cell, List[Tuple[int, int, str]]] = defaultdict(list)
    for n in range(1, X.depth):
        for (y, q, eps), x in X.faces[n].items():
            table[(n - 1, x)].append((q, eps, y))
    return table


def refine_colors(X: FibredSet) -> Dict[_Cell, int]:
    """ラベルに依存しない色を安定するまで細分する

    Examples:
        >>> X = FibredSet(1, (("a", "b"), ("e",)), ({}, {("e", 0, 0): "a"}))
        >>> colors = refine_colors(X)
        >>> colors[(0, "a")] != colors[(0, "b")]
        True
    """
    cells = [(n, x) for n, xs in enumerate(X.cells) for x in xs]
    cofaces = _cofaces(X)
    colors: Dict[_Cell, int] = {c: c[0] for c in cells}
    classes = len(set(colors.values()))
    while True:
        signatures = {}
        for n, x in cells:
            faces = tuple(
                colors[(n - 1, X.faces[n][(x, q, eps)])] for q in range(n) for eps in range(X.nu)
            )
            above = tuple(sorted((q, eps, colors[(n + 1, y)]) for q, eps, y in cofaces.get((n, x), ())))
            signatures[(n, x)] = (colors[(n, x)], faces, above)
        ranks = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
        colors = {c: ranks[sig] for c, sig in signatures.items()}
        if len(ranks) == classes:
            return colors
        classes = len(ranks)


def canonical_form(A: Structure, evaluator: Optional[RestrictionEvaluator] = None) -> CanonicalForm:
    """次元ごとに、各セルの面の正準番号を正準順で並べたもの

    Raises:
        FibredError: インデックス形式の入力が妥当でない
    """
    X = _as_fibred(A, evaluator)
    colors = refine_colors(X)
    form = []
    previous: Dict[str, int] = {}
    for n, xs in enumerate(X.cells):
        keyed = []
        for position, x in enumerate(xs):
            faces = tuple(previous[X.faces[n][(x, q, eps)]] for q in range(n) for eps in range(X.nu))
            keyed.append(((colors[(n, x)], faces, position), x))
        keyed.sort()
        previous = {x: i for i, (_, x) in enumerate(keyed)}
        form.append(tuple(key[1] for key, _ in keyed))
    return tuple(form)


def iso_check(A: Structure, B: Structure, evaluator: Optional[RestrictionEvaluator] = None) -> bool:
    """A と B が同型か（正準形の一致で判定する）

    ν か深さが違えば False。

    Examples:
        >>> A = FibredSet(1, (("a", "b"),))
        >>> iso_check(A, FibredSet(1, (("x", "y"),)))
        True
        >>> iso_check(A, FibredSet(1, (("x",),)))
        False
    """
    X = _as_fibred(A, evaluator)
    Y = _as_fibred(B, evaluator)
    if X.nu != Y.nu or X.depth != Y.depth:
        logger.debug("shape differs: nu %d/%d, depth %d/%d", X.nu, Y.nu, X.depth, Y.depth)
        return False
    if X.cell_counts != Y.cell_counts:
        logger.debug("cell counts differ: %s / %s", X.cell_counts, Y.cell_counts)
        return False
    left, right = canonical_form(X), canonical_form(Y)
    for n, (lhs, rhs) in enumerate(zip(left, right)):
        if lhs != rhs:
            logger.debug("canonical forms differ at dimension %d", n)
            return False
    return True

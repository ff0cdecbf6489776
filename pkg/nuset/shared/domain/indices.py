"""インデックス演算

責務: すべての再帰を支配するインデックス (n, p, q, r, ε, ω) の範囲検証と列挙。

【規約】
- ε, ω は 0..ν−1 の0始まり（表示側で付け替えてよい）
- q は引数のランク p から測った相対的な方向。絶対的な方向は p + q
- 不等式の前提は証明オブジェクトではなく実行時検証 (IndexRangeError)
- 内部では k = n − p（目標次元までの距離）で再帰してよいが、公開APIは (n, p)
"""

from dataclasses import dataclass
from typing import List

from .errors import IndexRangeError


# ============================================================================
# インデックス型
# ============================================================================


@dataclass(frozen=True, order=True)
class FaceIndex:
    """面インデックス (q, ε)

    Attributes:
        q: ランクから測った方向 (0 ≤ q ≤ n−p)
        eps: 方向内の面 (0 ≤ eps < ν)
    """
    q: int
    eps: int


@dataclass(frozen=True, order=True)
class CohIndex:
    """整合性インデックス (q, r, ε, ω)

    フィールド順がそのまま辞書式順序になる。

    Attributes:
        q: 外側の制限の方向
        r: 内側の制限の方向 (r ≤ q)
        eps: q 側の面
        omega: r 側の面
    """
    q: int
    r: int
    eps: int
    omega: int


# ============================================================================
# 範囲検証
# ============================================================================


def check_arity(nu: int) -> int:
    """アリティ ν ≥ 1 を検証する

    Examples:
        >>> check_arity(2)
        2
    """
    if not isinstance(nu, int) or nu < 1:
        raise IndexRangeError(f"arity must be a positive integer, got {nu!r}")
    return nu


def check_rank(n: int, p: int) -> None:
    """0 ≤ p ≤ n を検証する"""
    if n < 0:
        raise IndexRangeError(f"dimension must be non-negative, got n={n}")
    if p < 0 or p > n:
        raise IndexRangeError(f"rank out of range: p={p} not in [0, {n}]")


def check_face(n: int, p: int, q: int, eps: int, nu: int) -> None:
    """面インデックスの範囲 q ≤ n−p, ε < ν を検証する"""
    check_rank(n, p)
    if q < 0 or q > n - p:
        raise IndexRangeError(f"face direction out of range: q={q} not in [0, {n - p}] (n={n}, p={p})")
    if eps < 0 or eps >= nu:
        raise IndexRangeError(f"face side out of range: eps={eps} not in [0, {nu})")


def check_coh(n: int, p: int, coh: CohIndex, nu: int) -> None:
    """整合性インデックスの範囲 r ≤ q ≤ n−p を検証する"""
    check_face(n, p, coh.q, coh.eps, nu)
    if coh.r < 0 or coh.r > coh.q:
        raise IndexRangeError(f"coherence pair out of range: r={coh.r} not in [0, q={coh.q}]")
    if coh.omega < 0 or coh.omega >= nu:
        raise IndexRangeError(f"coherence side out of range: omega={coh.omega} not in [0, {nu})")


# ============================================================================
# 列挙
# ============================================================================


def face_indices(n: int, p: int, nu: int) -> List[FaceIndex]:
    """(n, p) 文脈で許される面インデックスを (q, ε) の辞書式順で列挙する

    Args:
        n: 次元
        p: ランク (p ≤ n)
        nu: アリティ

    Returns:
        ν·(n−p+1) 個の FaceIndex

    Examples:
        >>> [(f.q, f.eps) for f in face_indices(1, 0, 2)]
        [(0, 0), (0, 1), (1, 0), (1, 1)]
        >>> len(face_indices(3, 1, 2))
        6
    """
    check_arity(nu)
    check_rank(n, p)
    return [FaceIndex(q, eps) for q in range(distance(n, p) + 1) for eps in range(nu)]


def coh_indices(n: int, p: int, nu: int) -> List[CohIndex]:
    """(n, p) 文脈で許される整合性インデックスを (q, r, ε, ω) の辞書式順で列挙する

    Returns:
        ν²·(n−p+1)(n−p+2)/2 個の CohIndex

    Examples:
        >>> [(c.q, c.r) for c in coh_indices(1, 0, 1)]
        [(0, 0), (1, 0), (1, 1)]
        >>> len(coh_indices(2, 0, 2))
        24
    """
    check_arity(nu)
    check_rank(n, p)
    k = distance(n, p)
    return [
        CohIndex(q, r, eps, omega)
        for q in range(k + 1)
        for r in range(q + 1)
        for eps in range(nu)
        for omega in range(nu)
    ]


# ============================================================================
# 補助
# ============================================================================


def distance(n: int, p: int) -> int:
    """目標次元までの距離 k = n − p"""
    check_rank(n, p)
    return n - p


def relative_to_absolute(p: int, q: int) -> int:
    """ランク p から測った方向 q を絶対的な方向に変換する

    Examples:
        >>> relative_to_absolute(1, 2)
        3
    """
    return p + q


def absolute_to_relative(p: int, direction: int) -> int:
    """絶対的な方向をランク p から測った方向に変換する"""
    if direction < p:
        raise IndexRangeError(f"direction {direction} lies below rank {p}")
    return direction - p

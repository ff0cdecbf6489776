"""ファイバー形式（セル集合と面写像）

クラス一覧:
    - FibredSet: 次元ごとのセル列と面写像 ∂_{q,ε}
    - IdentityViolation / IdentityReport: 面の恒等式の検査結果

ν=1 では拡張半単体集合（次元 n のセル = 古典的な (n−1)-単体、X_0 は拡張の集合）、
ν=2 では半立方体集合。
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ...shared.domain.errors import IndexRangeError
from ...shared.domain.indices import check_arity

FaceMap = Dict[Tuple[str, int, int], str]


@dataclass(frozen=True)
class FibredSet:
    """X_0, X_1, … と ∂_{q,ε} : X_n → X_{n−1}

    Attributes:
        nu: アリティ
        cells: 次元 n → セルIDの列（重複なし、この順で出力する）
        faces: 次元 n → (セル, q, ε) → 次元 n−1 のセル（0 ≤ q ≤ n−1, ε < ν）。
            faces[0] は空

    Examples:
        >>> X = FibredSet(1, (("a", "b"), ("e",)), ({}, {("e", 0, 0): "a"}))
        >>> X.depth, X.face(1, "e", 0, 0)
        (2, 'a')
    """
    nu: int
    cells: Tuple[Tuple[str, ...], ...] = ()
    faces: Tuple[FaceMap, ...] = field(default=(), hash=False)

    def __post_init__(self):
        check_arity(self.nu)
        object.__setattr__(self, "cells", tuple(tuple(c) for c in self.cells))
        faces = tuple(self.faces)
        if len(faces) < len(self.cells):
            faces = faces + tuple({} for _ in range(len(self.cells) - len(faces)))
        object.__setattr__(self, "faces", faces)

    @property
    def depth(self) -> int:
        """次元の数（X_0..X_{depth−1}）"""
        return len(self.cells)

    def face(self, n: int, cell: str, q: int, eps: int) -> Optional[str]:
        """∂_{q,ε}(cell)（未定義なら None）"""
        if n < 1 or n >= self.depth:
            raise IndexRangeError(f"dimension {n} has no faces in a fibred set of depth {self.depth}")
        return self.faces[n].get((cell, q, eps))

    def faces_of(self, n: int, cell: str) -> Dict[Tuple[int, int], str]:
        """cell の面を (q, ε) → セル で返す"""
        if n == 0:
            return {}
        return {(q, eps): target for (c, q, eps), target in self.faces[n].items() if c == cell}

    @property
    def cell_counts(self) -> List[int]:
        return [len(c) for c in self.cells]


@dataclass(frozen=True)
class IdentityViolation:
    """面写像の違反

    Attributes:
        dim: セルの次元
        cell: セルID
        kind: "duplicate_cell" / "missing_face" / "extra_face" / "dangling_face" / "identity"
        detail: 説明
    """
    dim: int
    cell: str
    kind: str
    detail: str

    def describe(self) -> str:
        return f"[dim {self.dim}] {self.kind} at {self.cell}: {self.detail}"


@dataclass
class IdentityReport:
    """check_identities の結果"""
    nu: int
    depth: int
    checks: int = 0
    violations: List[IdentityViolation] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def add(self, dim: int, cell: str, kind: str, detail: str) -> None:
        self.violations.append(IdentityViolation(dim, cell, kind, detail))

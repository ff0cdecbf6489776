"""入出力ドキュメントのスキーマ

責務: JSONドキュメントの形を pydantic で検証し、ドメインオブジェクトと相互変換する。

【インデックス形式の例】
{
    "nu": 2,
    "levels": [
        {"dim": 0, "fibers": {"*": ["a", "b"]}},
        {"dim": 1, "fibers": {"(*;[#a|#a])": ["e"], ...}}
    ]
}

【ファイバー形式の例】
{
    "nu": 1,
    "dims": [
        {"dim": 0, "elements": ["pt"], "faces": {}},
        {"dim": 1, "elements": ["a"], "faces": {"0,0": {"a": "pt"}}}
    ]
}

スキーマ違反はここで落とす（CLIでは終了コード2）。ファイバーのキー集合や
面の恒等式などの意味的な検査は validate / check_identities に任せる（終了コード1）。
"""

import re
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..concrete.domain.nuset import LevelFamily, TruncatedNuSet
from ..fibred.domain.fibred_set import FaceMap, FibredSet
from ..shared.utils.canonical_key import is_valid_label, parse_frame_key

FACE_KEY_PATTERN = re.compile(r"(0|[1-9][0-9]*),(0|[1-9][0-9]*)")


def _check_labels(labels: List[str]) -> List[str]:
    for label in labels:
        if not is_valid_label(label):
            raise ValueError(f"label {label!r} does not match [A-Za-z0-9_]+")
    return labels


def _check_dims(dims: List[int], field_name: str) -> None:
    if dims != list(range(len(dims))):
        raise ValueError(f"{field_name} must list dims 0, 1, 2, ... in order (got {dims})")


# ============================================================================
# インデックス形式
# ============================================================================


class IndexedLevelModel(BaseModel):
    """1レベル分のファミリー E_dim"""

    model_config = ConfigDict(extra="forbid")

    dim: int = Field(ge=0)
    fibers: Dict[str, List[str]]

    @field_validator("fibers")
    @classmethod
    def _keys_and_labels(cls, fibers: Dict[str, List[str]]) -> Dict[str, List[str]]:
        for key, labels in fibers.items():
            parse_frame_key(key)
            _check_labels(labels)
        return fibers


class IndexedDocumentModel(BaseModel):
    """インデックス形式のドキュメント"""

    model_config = ConfigDict(extra="forbid")

    nu: int = Field(ge=1)
    levels: List[IndexedLevelModel]

    @model_validator(mode="after")
    def _consecutive(self) -> "IndexedDocumentModel":
        _check_dims([level.dim for level in self.levels], "levels")
        return self


def document_to_nuset(doc: IndexedDocumentModel) -> TruncatedNuSet:
    """ドキュメント → TruncatedNuSet（ラベル順はそのまま。整列の検査は validate）"""
    return TruncatedNuSet(
        doc.nu,
        tuple(
            LevelFamily(level.dim, {key: tuple(labels) for key, labels in level.fibers.items()})
            for level in doc.levels
        ),
    )


def nuset_to_document(D: TruncatedNuSet) -> IndexedDocumentModel:
    """TruncatedNuSet → ドキュメント

    Examples:
        >>> D = TruncatedNuSet(2, (LevelFamily(0, {"*": ("a",)}),))
        >>> nuset_to_document(D).model_dump()
        {'nu': 2, 'levels': [{'dim': 0, 'fibers': {'*': ['a']}}]}
    """
    return IndexedDocumentModel(
        nu=D.nu,
        levels=[
            IndexedLevelModel(dim=family.level, fibers={key: list(labels) for key, labels in family.fibers.items()})
            for family in D.levels
        ],
    )


# ============================================================================
# ファイバー形式
# ============================================================================


class FibredDimModel(BaseModel):
    """1次元分のセルと面写像"""

    model_config = ConfigDict(extra="forbid")

    dim: int = Field(ge=0)
    elements: List[str]
    faces: Dict[str, Dict[str, str]] = Field(default_factory=dict)

    @field_validator("elements")
    @classmethod
    def _elements(cls, elements: List[str]) -> List[str]:
        return _check_labels(elements)

    @field_validator("faces")
    @classmethod
    def _face_keys(cls, faces: Dict[str, Dict[str, str]]) -> Dict[str, Dict[str, str]]:
        for key in faces:
            if FACE_KEY_PATTERN.fullmatch(key) is None:
                raise ValueError(f"face key {key!r} must look like 'q,eps'")
        return faces


class FibredDocumentModel(BaseModel):
    """ファイバー形式のドキュメント"""

    model_config = ConfigDict(extra="forbid")

    nu: int = Field(ge=1)
    dims: List[FibredDimModel]

    @model_validator(mode="after")
    def _consecutive(self) -> "FibredDocumentModel":
        _check_dims([d.dim for d in self.dims], "dims")
        return self


def _split_face_key(key: str) -> Tuple[int, int]:
    q, eps = key.split(",")
    return int(q), int(eps)


def document_to_fibred(doc: FibredDocumentModel) -> FibredSet:
    """ドキュメント → FibredSet（面の全域性・恒等式の検査は check_identities）"""
    cells = []
    faces = []
    for d in doc.dims:
        face_map: FaceMap = {}
        for key, assignment in d.faces.items():
            q, eps = _split_face_key(key)
            for source, target in assignment.items():
                face_map[(source, q, eps)] = target
        cells.append(tuple(d.elements))
        faces.append(face_map)
    return FibredSet(doc.nu, tuple(cells), tuple(faces))


def fibred_to_document(X: FibredSet) -> FibredDocumentModel:
    """FibredSet → ドキュメント

    Examples:
        >>> X = FibredSet(1, (("v",), ("e",)), ({}, {("e", 0, 0): "v"}))
        >>> fibred_to_document(X).dims[1].faces
        {'0,0': {'e': 'v'}}
    """
    dims = []
    for n, cells in enumerate(X.cells):
        grouped: Dict[str, Dict[str, str]] = {}
        for (cell, q, eps), target in sorted(X.faces[n].items()):
            grouped.setdefault(f"{q},{eps}", {})[cell] = target
        dims.append(FibredDimModel(dim=n, elements=list(cells), faces=grouped))
    return FibredDocumentModel(nu=X.nu, dims=dims)

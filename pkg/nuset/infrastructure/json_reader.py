"""JSON読み込み機能

責務: インデックス形式・ファイバー形式のドキュメントを読み込み、種類を判定する。

【種類の判定】
- "levels" を持てばインデックス形式
- "dims" を持てばファイバー形式
- どちらも持たない・両方持つ場合はエラー

JSON構文エラーは行・列つきの DocumentError、スキーマ違反は
フィールドの位置つきの DocumentError にする。
"""

import json
from pathlib import Path
from typing import Type, Union

from pydantic import BaseModel, ValidationError

from ..shared.domain.errors import DocumentError
from .documents import FibredDocumentModel, IndexedDocumentModel

Document = Union[IndexedDocumentModel, FibredDocumentModel]


def parse_document(text: str) -> Document:
    """文字列からドキュメントを読む

    Raises:
        DocumentError: JSON構文エラー、種類の判定失敗、スキーマ違反

    Examples:
        >>> parse_document('{"nu": 1, "dims": []}').nu
        1
        >>> try:
        ...     parse_document('{"nu": 1,')
        ... except DocumentError as e:
        ...     (e.line, e.column)
        (1, 10)
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"malformed JSON: {e.msg}", line=e.lineno, column=e.colno) from None

    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    if "levels" in data and "dims" in data:
        raise DocumentError("document has both 'levels' and 'dims'")
    if "levels" in data:
        model: Type[BaseModel] = IndexedDocumentModel
    elif "dims" in data:
        model = FibredDocumentModel
    else:
        raise DocumentError("document has neither 'levels' (indexed) nor 'dims' (fibred)")

    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "<document>"
        raise DocumentError(f"schema violation at {where}: {first['msg']}") from None


def read_document(file_path: str) -> Document:
    """ファイルからドキュメントを読む

    Raises:
        DocumentError: 読めない・パースできない
    """
    try:
        text = Path(file_path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read {file_path}: {e.strerror}") from None
    return parse_document(text)

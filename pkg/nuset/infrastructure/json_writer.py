"""JSON出力

正準形: キーを整列、インデント2、ensure_ascii=False、末尾に改行1つ。
同じ内容なら常に同じバイト列になる。
"""

import json
from pathlib import Path
from typing import Any, Union

from pydantic import BaseModel


def dumps_canonical(data: Union[BaseModel, Any]) -> str:
    """data を正準形のJSON文字列にする

    Examples:
        >>> dumps_canonical({"b": 1, "a": [2]})
        '{\\n  "a": [\\n    2\\n  ],\\n  "b": 1\\n}\\n'
    """
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json")
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_text(output_file: str, text: str) -> None:
    """text をそのまま書き出す（親ディレクトリは作る）"""
    output_path = Path(output_file)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def write_document(data: Union[BaseModel, Any], output_file: str) -> str:
    """正準形で書き出す

    Returns:
        書き出した文字列
    """
    text = dumps_canonical(data)
    write_text(output_file, text)
    return text

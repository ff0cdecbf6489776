"""入出力（設定、ドキュメント、ログ）

- config_loader.py: config/settings.jsonc の読み込み
- documents.py: pydantic スキーマとドメインオブジェクトの相互変換
- json_reader.py / json_writer.py: ドキュメントの読み書き（正準形）
- dot_writer.py: ファイバー形式の DOT 出力
- report_writer.py: Markdown / CSV の実行ログ
"""

from .config_loader import load_engine_settings, load_jsonc
from .documents import (
    FibredDimModel,
    FibredDocumentModel,
    IndexedDocumentModel,
    IndexedLevelModel,
    document_to_fibred,
    document_to_nuset,
    fibred_to_document,
    nuset_to_document,
)
from .json_reader import Document, parse_document, read_document
from .json_writer import dumps_canonical, write_document, write_text
from .dot_writer import fibred_to_dot
from .report_writer import RunLog, save_run_logs

__all__ = [
    "load_engine_settings",
    "load_jsonc",
    "FibredDimModel",
    "FibredDocumentModel",
    "IndexedDocumentModel",
    "IndexedLevelModel",
    "document_to_fibred",
    "document_to_nuset",
    "fibred_to_document",
    "nuset_to_document",
    "Document",
    "parse_document",
    "read_document",
    "dumps_canonical",
    "write_document",
    "write_text",
    "fibred_to_dot",
    "RunLog",
    "save_run_logs",
]

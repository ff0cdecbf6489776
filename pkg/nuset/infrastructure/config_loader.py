"""設定ファイル読み込みモジュール"""

import json
import logging
import re
from pathlib import Path
from typing import Any, Dict

logger = logging.getLogger(__name__)

SETTINGS_FILE = "settings.jsonc"


# 文字列リテラルを先に読み飛ばし、その外にあるコメントだけを落とす
_JSONC_TOKEN = re.compile(r'"(?:\\.|[^"\\])*"|//[^\n]*|/\*.*?\*/', re.DOTALL)


def load_jsonc(file_path: str) -> Dict[str, Any]:
    """JSONCファイルを読み込む（コメント付きJSON）

    文字列の中の // や /* */ はそのまま残す。

    Args:
        file_path: JSONCファイルのパス

    Returns:
        パースされた辞書
    """
    with open(file_path, "r", encoding="utf-8") as f:
        content = f.read()

    content = _JSONC_TOKEN.sub(lambda m: m.group(0) if m.group(0).startswith('"') else "", content)

    return json.loads(content)


def load_engine_settings(config_dir: str = "config") -> Dict[str, Any]:
    """エンジン設定を読み込む（欠けた項目は既定値で埋める）

    ファイルがなければ既定値だけを返す。

    Args:
        config_dir: 設定ファイルディレクトリ

    Returns:
        {"generator": {...}, "report": {...}, "sweep": {...}}

    Examples:
        >>> settings = load_engine_settings("no_such_dir")
        >>> settings["generator"]["seed"], settings["sweep"]["max_level"]
        (42, 4)
    """
    settings_path = Path(config_dir) / SETTINGS_FILE
    if settings_path.exists():
        data = load_jsonc(str(settings_path))
    else:
        logger.debug("%s not found, using defaults", settings_path)
        data = {}

    generator = data.setdefault("generator", {})
    generator.setdefault("max_fiber", 2)
    generator.setdefault("seed", 42)

    report = data.setdefault("report", {})
    report.setdefault("log_dir", "nuset_result/logs")

    sweep = data.setdefault("sweep", {})
    sweep.setdefault("max_level", 4)

    return data

"""実行ログの出力

責務: check / coherence / build の結果を人間が読みやすい形式（Markdown, CSV）で出力する。

【出力ファイル】
1. サマリーログ (Markdown)
   - {command}_summary_{timestamp}.md
   - 入力、判定、集計値

2. 詳細 (CSV)
   - {command}_details_{timestamp}.csv
   - 違反の一覧、またはステージトレースの各行
"""

import csv
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple


@dataclass
class RunLog:
    """1回のコマンド実行の記録

    Attributes:
        command: コマンド名（ファイル名の接頭辞）
        title: サマリーの見出し
        passed: 判定（妥当 / 全検査成功 / 構築成功）
        facts: サマリーに載せる (項目, 値) の列
        columns: CSV のヘッダー
        rows: CSV のデータ行
    """
    command: str
    title: str
    passed: bool
    facts: List[Tuple[str, Any]] = field(default_factory=list)
    columns: Sequence[str] = ()
    rows: List[Sequence[Any]] = field(default_factory=list)


def save_run_logs(log: RunLog, log_dir: str = "nuset_result/logs") -> Dict[str, str]:
    """実行ログを保存

    Args:
        log: 実行の記録
        log_dir: ログ出力ディレクトリ

    Returns:
        保存したファイルパスの辞書 {"summary": "...", "details": "..."}
    """
    # ========================================================================
    # 出力ディレクトリの準備
    # ========================================================================
    log_path = Path(log_dir)
    log_path.mkdir(parents=True, exist_ok=True)

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")

    # ========================================================================
    # 各形式でログを出力
    # ========================================================================
    saved_files = {}

    summary_file = log_path / f"{log.command}_summary_{timestamp}.md"
    _save_summary_markdown(log, summary_file, timestamp)
    saved_files["summary"] = str(summary_file)

    details_file = log_path / f"{log.command}_details_{timestamp}.csv"
    _save_details_csv(log, details_file)
    saved_files["details"] = str(details_file)

    return saved_files


# ============================================================================
# サマリーログ (Markdown)
# ============================================================================


def _save_summary_markdown(log: RunLog, filepath: Path, timestamp: str) -> None:
    with open(filepath, "w", encoding="utf-8") as f:
        f.write(f"# {log.title}\n\n")
        f.write(f"- **実行日時**: {timestamp}\n")
        f.write(f"- **コマンド**: `{log.command}`\n")
        f.write(f"- **判定**: {'OK' if log.passed else 'NG'}\n\n")

        f.write("## 集計\n\n")
        f.write("| 項目 | 値 |\n")
        f.write("|------|-----|\n")
        for name, value in log.facts:
            f.write(f"| {name} | {value} |\n")
        f.write("\n")

        f.write("## 詳細\n\n")
        if log.rows:
            f.write(f"{len(log.rows)} 行を CSV に出力した。\n")
        else:
            f.write("詳細行なし。\n")


# ============================================================================
# 詳細 (CSV)
# ============================================================================


def _save_details_csv(log: RunLog, filepath: Path) -> None:
    with open(filepath, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(list(log.columns))
        for row in log.rows:
            writer.writerow(list(row))

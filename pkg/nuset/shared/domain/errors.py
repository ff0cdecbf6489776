"""ドメイン例外

責務: nuset全体で使う例外階層を定義する。

【方針】
- 構築時の前提違反（インデックス範囲、木の形、キー文法）は例外を送出する
- 意味的な検証（validate, check_identities, check_coh_refl）は例外ではなく
  レポートを返す
"""

from typing import Optional


class NuSetError(Exception):
    """nuset の全例外の基底クラス"""


class IndexRangeError(NuSetError, ValueError):
    """インデックスの範囲条件 (p ≤ n, q ≤ n−p, r ≤ q, ε < ν) 違反"""


class ShapeError(NuSetError):
    """木の形やファミリーの不整合

    Attributes:
        key: 問題のある正準キー（あれば）
        level: 問題が起きたレベル（あれば）
    """

    def __init__(self, message: str, key: Optional[str] = None, level: Optional[int] = None):
        self.key = key
        self.level = level
        detail = message
        if level is not None:
            detail = f"level {level}: {detail}"
        if key is not None:
            detail = f"{detail} (key={key})"
        super().__init__(detail)


class KeyGrammarError(NuSetError, ValueError):
    """CanonicalFrameKey のパース失敗

    Attributes:
        text: 入力文字列
        position: 失敗位置（0始まり）
    """

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class StageError(NuSetError):
    """段階的ビルダーのステージ失敗

    Attributes:
        stage: ステージ名（例: "stage 3 frame+restr_FRAME"）
        level: 構築中のレベル
        edge: 違反した依存関係の説明
    """

    def __init__(self, stage: str, level: int, edge: str, detail: str = ""):
        self.stage = stage
        self.level = level
        self.edge = edge
        message = f"[{stage}] level {level}: {edge}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class FibredError(NuSetError):
    """ファイバー形式の恒等式違反・境界組み立ての失敗

    Attributes:
        cell: 問題のあるセルID（あれば）
        dim: そのセルの次元（あれば）
    """

    def __init__(self, message: str, cell: Optional[str] = None, dim: Optional[int] = None):
        self.cell = cell
        self.dim = dim
        if cell is not None:
            message = f"{message} (dim={dim}, cell={cell})"
        super().__init__(message)


class DocumentError(NuSetError):
    """入力ドキュメントのパース・スキーマ失敗（CLIでは終了コード2）

    Attributes:
        line: JSON構文エラーの行番号（あれば）
        column: JSON構文エラーの列番号（あれば）
    """

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)

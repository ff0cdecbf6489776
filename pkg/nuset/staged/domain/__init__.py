"""段階的ビルダーのドメイン

クラス一覧:
    - Stage: build_level の10ステージ
    - DepsKind / DepsBundle: ステージが消費する依存束
    - StageTrace: ステージの実行記録
    - RankZipper: ランク再帰用のジッパー
    - StageBundle: レベル束（6種類の表）
"""

from .stage import Stage, DepsKind, DepsBundle, StageTrace, DEPS_ENTRIES
from .zipper import RankZipper
from .bundle import StageBundle

__all__ = [
    "Stage",
    "DepsKind",
    "DepsBundle",
    "StageTrace",
    "DEPS_ENTRIES",
    "RankZipper",
    "StageBundle",
]

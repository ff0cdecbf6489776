"""ランダムインスタンス生成の設定"""

from pydantic import BaseModel, ConfigDict, Field


class GeneratorConfig(BaseModel):
    """generate の入力パラメータ

    同じ設定からは常に同じ ν-集合（同じバイト列）が生成される。

    Attributes:
        nu: アリティ（1以上）
        depth: 生成するレベル数（E_0..E_{depth−1}）
        max_fiber: ファイバーの最大サイズ（各ファイバーは 1..max_fiber から一様に選ぶ）
        seed: 64ビットのシード

    Examples:
        >>> GeneratorConfig(nu=2, depth=2, max_fiber=2, seed=42).max_fiber
        2
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    nu: int = Field(ge=1)
    depth: int = Field(ge=0)
    max_fiber: int = Field(default=2, ge=1)
    seed: int = Field(default=42, ge=0, lt=2**64)

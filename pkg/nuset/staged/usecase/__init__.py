"""段階的ビルダーのユースケース

- stages.py: 10ステージと StageContext
- build.py: init_bundle / build_level / build_tower
"""

from .stages import StageContext, StageStep, DEFAULT_STAGES
from .build import init_bundle, build_level, build_tower

__all__ = [
    "StageContext",
    "StageStep",
    "DEFAULT_STAGES",
    "init_bundle",
    "build_level",
    "build_tower",
]

"""生成器のドメイン"""

from .generator_config import GeneratorConfig

__all__ = ["GeneratorConfig"]

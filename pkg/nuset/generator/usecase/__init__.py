"""生成器のユースケース

- generate_instance.py: PCG64 による決定的な生成
"""

from .generate_instance import element_label, generate_family, generate_instance

__all__ = ["element_label", "generate_family", "generate_instance"]

"""インデックス形式 ⇄ ファイバー形式

- identities.py: 面の恒等式の検査
- to_fibred.py: インデックス形式 → ファイバー形式
- to_indexed.py: ファイバー形式 → インデックス形式（境界の組み立て）
- iso.py: 正準形による同型判定
"""

from .identities import check_identities
from .to_fibred import cell_ids, face_count, to_fibred, total_cells
from .to_indexed import assemble_painting, to_indexed
from .iso import canonical_form, iso_check, refine_colors

__all__ = [
    "check_identities",
    "cell_ids",
    "face_count",
    "to_fibred",
    "total_cells",
    "assemble_painting",
    "to_indexed",
    "canonical_form",
    "iso_check",
    "refine_colors",
]

"""記号計算のユースケース

- terms.py: 簡約付きの restr / 射影と代入
- normalize.py: 型の正規化
- unfold.py: frame / layer / painting の型の展開とシグネチャ
- render.py: テキスト表示
- formal_restriction.py: 形式フレーム上の制限と整合性の記号的検査
- instantiate.py: 具体値との対応と住人の数え上げ
"""

from .terms import proj_tm, restr_frame_tm, restr_layer_tm, restr_painting_tm, subst, free_vars
from .normalize import normalize, generic_term, telescope, count_leaves
from .unfold import unfold_frame, unfold_layer, unfold_painting, signature
from .render import render_signature, render_signatures, render_type, render_term, letter_name
from .formal_restriction import (
    formal_frame,
    formal_painting,
    leaf_names,
    symbolic_restr_frame,
    symbolic_restr_painting,
    check_coh_refl,
    check_coh_refl_painting,
    sweep_coh_refl,
    mismatch_paths,
)
from .instantiate import (
    value_to_term,
    term_to_frame,
    term_to_painting,
    match_leaves,
    instantiate,
    inhabitants,
    count_instances,
)

__all__ = [
    "proj_tm",
    "restr_frame_tm",
    "restr_layer_tm",
    "restr_painting_tm",
    "subst",
    "free_vars",
    "normalize",
    "generic_term",
    "telescope",
    "count_leaves",
    "unfold_frame",
    "unfold_layer",
    "unfold_painting",
    "signature",
    "render_signature",
    "render_signatures",
    "render_type",
    "render_term",
    "letter_name",
    "formal_frame",
    "formal_painting",
    "leaf_names",
    "symbolic_restr_frame",
    "symbolic_restr_painting",
    "check_coh_refl",
    "check_coh_refl_painting",
    "sweep_coh_refl",
    "mismatch_paths",
    "value_to_term",
    "term_to_frame",
    "term_to_painting",
    "match_leaves",
    "instantiate",
    "inhabitants",
    "count_instances",
]

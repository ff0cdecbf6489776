"""記号計算（展開・正規化・表示・整合性の反射律）のテスト"""

from collections import Counter
from math import comb

import pytest

from nuset.shared.domain.errors import IndexRangeError, ShapeError
from nuset.symbolic.domain.expr import STAR_TM, ArrowTy, FamApp, PairTm, SortTy, TupleTm, UnitTy, VarTm
from nuset.symbolic.usecase.formal_restriction import (
    check_coh_refl,
    check_coh_refl_painting,
    formal_frame,
    leaf_names,
    mismatch_paths,
    symbolic_restr_frame,
    sweep_coh_refl,
)
from nuset.symbolic.usecase.instantiate import count_instances, term_to_frame, value_to_term
from nuset.symbolic.usecase.normalize import count_leaves, normalize, telescope
from nuset.symbolic.usecase.render import letter_name, render_signature, render_signatures, render_term, render_type
from nuset.symbolic.usecase.unfold import unfold_frame, unfold_painting

# ============================================================================
# シグネチャ
# ============================================================================


def test_signatures_for_nu_2():
    assert render_signatures(2, 2) == [
        "E_0 : HSet",
        "E_1 : E_0 × E_0 → HSet",
        "E_2 : Π a b c d. E_1(a,b) × E_1(c,d) × E_1(a,c) × E_1(b,d) → HSet",
    ]


def test_ascii_signature():
    assert render_signature(2, 1, ascii=True) == "E_1 : E_0 * E_0 -> HSet"
    assert "forall a b c d." in render_signature(2, 2, ascii=True)


def test_nu_1_level_1_has_one_base_point():
    assert render_signature(1, 1) == "E_1 : E_0 → HSet"


def test_letter_names():
    assert [letter_name(k) for k in (0, 1, 25, 26, 27)] == ["a", "b", "z", "aa", "ab"]


def test_render_terms_and_types():
    t = PairTm(STAR_TM, TupleTm((VarTm("a"), VarTm("b"))))
    assert render_term(t) == "(⋆, [a | b])"
    assert render_term(t, ascii=True) == "(*, [a | b])"
    assert render_type(ArrowTy(FamApp(0, VarTm("x")), SortTy()), ascii=True) == "E_0(x) -> HSet"
    assert render_type(UnitTy()) == "unit"


# ============================================================================
# 展開と正規化
# ============================================================================


def test_frame_at_rank_zero_is_unit():
    assert unfold_frame(2, 3, 0) == UnitTy()
    assert unfold_painting(2, 0, 0) == FamApp(0, STAR_TM)


def test_unfold_rejects_rank_above_level():
    with pytest.raises(IndexRangeError):
        unfold_frame(2, 1, 2)


def test_square_boundary_leaves():
    assert count_leaves(normalize(unfold_frame(2, 2, 2))) == Counter({0: 4, 1: 4})


@pytest.mark.parametrize("nu", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_fullframe_leaf_counts(nu, n):
    """fullframeⁿ の E_k の葉は C(n, k)·ν^(n−k) 個"""
    expected = Counter({k: comb(n, k) * nu ** (n - k) for k in range(n)})
    assert count_leaves(normalize(unfold_frame(nu, n, n))) == expected


@pytest.mark.parametrize(("nu", "n", "p"), [(1, 2, 1), (2, 2, 2), (2, 3, 1), (3, 2, 2)])
def test_normalize_is_idempotent(nu, n, p):
    once = normalize(unfold_frame(nu, n, p), nu)
    assert normalize(once, nu) == once


def test_normal_form_is_a_right_nested_telescope():
    entries = telescope(normalize(unfold_frame(2, 1, 1)))
    assert entries == [("x1", FamApp(0, STAR_TM)), (None, FamApp(0, STAR_TM))]


def test_symbolic_count_matches_enumeration(square_nuset):
    assert count_instances(normalize(unfold_frame(2, 1, 1)), square_nuset) == 4
    assert count_instances(normalize(unfold_frame(2, 2, 2)), square_nuset) == 16


# ============================================================================
# 形式フレームと記号的な制限
# ============================================================================


def test_formal_frame_leaves():
    d = formal_frame(2, 1, 1)
    assert d.term == PairTm(STAR_TM, TupleTm((VarTm("x1"), VarTm("x2"))))
    assert leaf_names(formal_frame(2, 2, 2).term) == [f"x{i}" for i in range(1, 9)]


def test_symbolic_restriction_to_rank_zero():
    assert symbolic_restr_frame(2, 0, 0, 0, 1, formal_frame(2, 1, 0)).term == STAR_TM


def test_symbolic_restriction_checks_shape():
    with pytest.raises(ShapeError):
        symbolic_restr_frame(2, 0, 0, 0, 0, formal_frame(2, 2, 0))


def test_value_term_round_trip():
    t = PairTm(STAR_TM, TupleTm((VarTm("a"), VarTm("b"))))
    assert value_to_term(term_to_frame(t)) == t


# ============================================================================
# 整合性の反射律
# ============================================================================


def test_single_coherence_holds():
    report = check_coh_refl(2, 1, 0, 1, 0, 0, 1)
    assert report.holds
    assert report.lhs == report.rhs
    assert report.describe().endswith("refl")


def test_coherence_rejects_bad_indices():
    with pytest.raises(IndexRangeError):
        check_coh_refl(2, 1, 0, 0, 1, 0, 0)


@pytest.mark.parametrize(("nu", "total"), [(1, 70), (2, 280), (3, 630)])
def test_frame_coherence_sweep_up_to_level_4(nu, total):
    summary = sweep_coh_refl(nu, 4)
    assert summary.all_hold
    assert summary.checked == total
    assert summary.by_level == {n: comb(n + 3, 3) * nu * nu for n in range(5)}


def test_painting_coherence_sweep():
    summary = sweep_coh_refl(2, 2, paintings=True)
    assert summary.all_hold
    assert summary.checked == 2 * (1 + 4 + 10) * 4


@pytest.mark.parametrize("nu", [1, 2])
def test_painting_coherence_at_top_rank(nu):
    assert check_coh_refl_painting(nu, 1, 1, 0, 0, 0, nu - 1).holds


def test_mismatch_paths():
    lhs = PairTm(VarTm("a"), TupleTm((VarTm("b"), VarTm("c"))))
    rhs = PairTm(VarTm("a"), TupleTm((VarTm("b"), VarTm("d"))))
    assert mismatch_paths(lhs, rhs) == ["snd.1"]
    assert mismatch_paths(VarTm("a"), VarTm("b")) == ["<root>"]
    assert mismatch_paths(lhs, lhs) == []

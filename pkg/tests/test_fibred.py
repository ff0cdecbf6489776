"""ファイバー形式との相互変換・面の恒等式・同型判定のテスト"""

import pytest

from nuset.concrete.domain.nuset import LevelFamily, TruncatedNuSet
from nuset.fibred.domain.fibred_set import FibredSet
from nuset.fibred.usecase.identities import check_identities
from nuset.fibred.usecase.iso import canonical_form, iso_check
from nuset.fibred.usecase.to_fibred import face_count, to_fibred
from nuset.fibred.usecase.to_indexed import to_indexed
from nuset.infrastructure.dot_writer import fibred_to_dot
from nuset.shared.domain.errors import FibredError

from .conftest import ASYMMETRIC_EDGES

RELABELED_EDGES = {
    "(*;[#x|#x])": ("s",),
    "(*;[#x|#y])": (),
    "(*;[#y|#x])": ("q", "r"),
    "(*;[#y|#y])": ("p",),
}


def _with_edges(edges, vertices=("a", "b")) -> TruncatedNuSet:
    return TruncatedNuSet(2, (LevelFamily(0, {"*": tuple(vertices)}), LevelFamily(1, dict(edges))))


def _redirect_face(X: FibredSet, n: int, cell: str, q: int, eps: int, target: str) -> FibredSet:
    faces = list(X.faces)
    faces[n] = {**faces[n], (cell, q, eps): target}
    return FibredSet(X.nu, X.cells, tuple(faces))


# ============================================================================
# インデックス形式 → ファイバー形式
# ============================================================================


def test_square_cells_and_faces(square_nuset):
    X = to_fibred(square_nuset)
    assert X.cells == (("a", "b"), ("aa", "ab", "ba", "bb"))
    assert X.face(1, "ab", 0, 0) == "a"
    assert X.face(1, "ab", 0, 1) == "b"


def test_every_cell_has_nu_times_n_faces(square_tower):
    X = to_fibred(square_tower)
    assert X.cell_counts == [2, 4, 16]
    for n in range(1, 3):
        for cell in X.cells[n]:
            assert face_count(X, n, cell) == 2 * n
    assert check_identities(X).holds


def test_invalid_nuset_is_not_exported(square_nuset):
    D = TruncatedNuSet(2, (square_nuset.levels[0], LevelFamily(1, {"(*;[#a|#a])": ("aa",)})))
    with pytest.raises(FibredError):
        to_fibred(D)


def test_repeated_labels_get_positional_ids():
    D = TruncatedNuSet(1, (LevelFamily(0, {"*": ("v", "w")}), LevelFamily(1, {"(*;[#v])": ("e",), "(*;[#w])": ("e",)})))
    assert to_fibred(D).cells[1] == ("c1_0", "c1_1")


# ============================================================================
# ファイバー形式 → インデックス形式
# ============================================================================


def test_round_trip_on_fixtures(square_nuset, square_tower, asymmetric_nuset):
    for D in (square_nuset, square_tower, asymmetric_nuset):
        assert to_indexed(to_fibred(D)) == D


@pytest.mark.parametrize(("nu", "depth", "max_fiber"), [(1, 3, 2), (2, 2, 3), (2, 3, 1), (3, 2, 1)])
@pytest.mark.parametrize("seed", [0, 5])
def test_round_trip_on_generated(generated, nu, depth, max_fiber, seed):
    D = generated(nu, depth, max_fiber, seed)
    assert to_indexed(to_fibred(D)) == D


def test_augmented_edge_over_one_point():
    X = FibredSet(1, (("v", "w"), ("e",)), ({}, {("e", 0, 0): "v"}))
    D = to_indexed(X)
    assert D.family(0).fibers == {"*": ("v", "w")}
    assert D.family(1).fibers == {"(*;[#v])": ("e",), "(*;[#w])": ()}


def test_invalid_cell_id():
    with pytest.raises(FibredError, match="cell id is not a valid label"):
        to_indexed(FibredSet(1, (("a b",),)))


def test_broken_identity_is_rejected(square_tower):
    X = to_fibred(square_tower)
    square = X.cells[2][0]
    old = X.face(2, square, 0, 0)
    replacement = next(e for e in X.cells[1] if X.faces_of(1, e) != X.faces_of(1, old))
    broken = _redirect_face(X, 2, square, 0, 0, replacement)

    report = check_identities(broken)
    assert not report.holds
    assert {v.kind for v in report.violations} == {"identity"}
    with pytest.raises(FibredError):
        to_indexed(broken)
    with pytest.raises(FibredError):
        iso_check(broken, X)


@pytest.mark.parametrize(
    ("X", "kind"),
    [
        (FibredSet(1, (("v",), ("e",)), ({}, {})), "missing_face"),
        (FibredSet(1, (("v",), ("e",)), ({}, {("e", 0, 0): "z"})), "dangling_face"),
        (FibredSet(1, (("v",), ("e",)), ({}, {("e", 0, 0): "v", ("e", 1, 0): "v"})), "extra_face"),
        (FibredSet(1, (("v", "v"),)), "duplicate_cell"),
    ],
)
def test_totality_violations(X, kind):
    report = check_identities(X)
    assert kind in {v.kind for v in report.violations}


# ============================================================================
# 同型判定
# ============================================================================


def test_relabeling_is_an_isomorphism(asymmetric_nuset):
    relabeled = _with_edges(RELABELED_EDGES, ("x", "y"))
    assert iso_check(asymmetric_nuset, relabeled)
    assert iso_check(to_fibred(asymmetric_nuset), relabeled)
    assert canonical_form(asymmetric_nuset) == canonical_form(relabeled)


def test_moving_an_edge_breaks_isomorphism(asymmetric_nuset):
    moved = dict(ASYMMETRIC_EDGES)
    moved["(*;[#b|#a])"] = ("h",)
    moved["(*;[#b|#b])"] = ()
    assert not iso_check(asymmetric_nuset, _with_edges(moved))


def test_different_counts_are_not_isomorphic(asymmetric_nuset):
    fewer = dict(ASYMMETRIC_EDGES)
    fewer["(*;[#b|#b])"] = ()
    assert not iso_check(asymmetric_nuset, _with_edges(fewer))


def test_different_arity_or_depth(square_nuset, square_tower):
    assert not iso_check(square_nuset, square_tower)
    assert not iso_check(FibredSet(1, (("v",),)), FibredSet(2, (("v",),)))


def test_generated_instance_is_isomorphic_to_itself(generated):
    D = generated(2, 2, 2, 3)
    assert iso_check(D, to_fibred(D))


# ============================================================================
# DOT 出力
# ============================================================================


def test_dot_has_one_edge_per_face(square_nuset):
    X = to_fibred(square_nuset)
    dot = fibred_to_dot(X, ascii=True)
    assert '"1:ab" -> "0:a" [label="d0,0"];' in dot
    assert dot.count("->") == 4 * 2
    assert "∂0,1" in fibred_to_dot(X)

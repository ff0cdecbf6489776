"""インデックス演算・値の木・正準キーのテスト"""

import hypothesis
import hypothesis.strategies as strat
import pytest

from nuset.shared.domain.errors import IndexRangeError, KeyGrammarError, ShapeError
from nuset.shared.domain.indices import (
    CohIndex,
    absolute_to_relative,
    check_arity,
    check_coh,
    check_face,
    check_rank,
    coh_indices,
    face_indices,
    relative_to_absolute,
)
from nuset.shared.domain.values import (
    STAR,
    Extend,
    Layered,
    Top,
    frame_of,
    painting_depth,
    painting_of,
    strip_layers,
    top_label,
)
from nuset.shared.utils.canonical_key import is_valid_label, parse_frame_key, parse_painting_key

ranks = strat.integers(0, 5).flatmap(lambda n: strat.tuples(strat.just(n), strat.integers(0, n)))
arities = strat.integers(1, 3)


# ============================================================================
# インデックス
# ============================================================================


@hypothesis.given(ranks, arities)
def test_face_indices_count_and_range(rank, nu):
    n, p = rank
    faces = face_indices(n, p, nu)
    assert len(faces) == nu * (n - p + 1)
    assert faces == sorted(faces)
    for f in faces:
        check_face(n, p, f.q, f.eps, nu)


@hypothesis.given(ranks, arities)
def test_coh_indices_count_and_order(rank, nu):
    n, p = rank
    k = n - p
    cohs = coh_indices(n, p, nu)
    assert len(cohs) == nu * nu * (k + 1) * (k + 2) // 2
    assert cohs == sorted(cohs)
    assert len(set(cohs)) == len(cohs)
    assert all(c.r <= c.q <= k for c in cohs)


def test_face_direction_out_of_range():
    with pytest.raises(IndexRangeError):
        check_face(1, 0, 2, 0, 2)
    with pytest.raises(IndexRangeError):
        check_face(1, 0, 0, 2, 2)


def test_coh_requires_r_at_most_q():
    with pytest.raises(IndexRangeError):
        check_coh(2, 0, CohIndex(q=0, r=1, eps=0, omega=0), 2)


@pytest.mark.parametrize("nu", [0, -1, 1.5])
def test_arity_must_be_positive_integer(nu):
    with pytest.raises(IndexRangeError):
        check_arity(nu)


def test_rank_above_dimension():
    with pytest.raises(IndexRangeError):
        check_rank(1, 2)


@hypothesis.given(strat.integers(0, 10), strat.integers(0, 10))
def test_relative_and_absolute_directions(p, q):
    assert absolute_to_relative(p, relative_to_absolute(p, q)) == q


def test_direction_below_rank():
    with pytest.raises(IndexRangeError):
        absolute_to_relative(2, 1)


# ============================================================================
# 値の木
# ============================================================================


def test_frame_and_painting_keys():
    d = Extend(STAR, (Top("a"), Top("b")))
    assert d.key == "(*;[#a|#b])"
    assert d.rank == 1
    c = Layered((Top("a"), Top("b")), Top("e"))
    assert c.key == "{[#a|#b];#e}"
    assert painting_depth(c) == 1
    assert top_label(c) == "e"


def test_painting_of_inverts_frame_of():
    d = Extend(Extend(STAR, (Top("a"), Top("b"))), (Top("x"), Top("y")))
    c = painting_of(d, "s")
    assert c.key == "{[#a|#b];{[#x|#y];#s}}"
    assert frame_of(c) == (d, "s")


def test_strip_too_many_layers():
    with pytest.raises(ShapeError):
        strip_layers(Layered((Top("a"),), Top("e")), 2)


# ============================================================================
# 正準キー
# ============================================================================

labels = strat.from_regex(r"[A-Za-z0-9_]{1,4}", fullmatch=True)


def paintings(nu: int):
    return strat.recursive(
        labels.map(Top),
        lambda inner: strat.builds(Layered, strat.tuples(*[inner] * nu), inner),
        max_leaves=12,
    )


@hypothesis.given(arities.flatmap(paintings))
def test_painting_key_parses_back(c):
    assert parse_painting_key(c.key) == c


def test_frame_key_parses():
    d = parse_frame_key("((*;[#a|#b]);[#e|#f])")
    assert isinstance(d, Extend)
    assert d.rank == 2
    assert d.prefix.key == "(*;[#a|#b])"


@pytest.mark.parametrize(
    ("text", "position"),
    [
        ("(*;[#a|#b]", 10),
        ("*x", 1),
        ("(*;[#|#b])", 5),
        ("", 0),
    ],
)
def test_key_grammar_errors_carry_position(text, position):
    with pytest.raises(KeyGrammarError) as excinfo:
        parse_frame_key(text)
    assert excinfo.value.position == position


def test_label_grammar():
    assert is_valid_label("e1_0003")
    assert not is_valid_label("")
    assert not is_valid_label("a-b")

"""段階的ビルダーのテスト"""

import logging

import pytest

from nuset.concrete.domain.nuset import LevelFamily, TruncatedNuSet
from nuset.concrete.usecase.enumeration import Enumerator
from nuset.concrete.usecase.validation import validate
from nuset.infrastructure.documents import document_to_nuset, nuset_to_document
from nuset.infrastructure.json_reader import parse_document
from nuset.infrastructure.json_writer import dumps_canonical
from nuset.shared.domain.errors import StageError
from nuset.staged.domain.stage import Stage, StageTrace
from nuset.staged.domain.zipper import RankZipper
from nuset.staged.usecase.build import build_level, build_tower, init_bundle
from nuset.staged.usecase.stages import CLOSED_NOTE, COH2_NOTE, DEFAULT_STAGES

from .mutants import HARMLESS_AT_TOP, FlipEvaluator, GhostEvaluator, corrupt_family, redirect_mutant

# シード付きの変異・破損に使う形 (ν, 深さ, 最大ファイバー)
SEEDED_SHAPES = [(1, 3, 2), (2, 2, 3), (2, 3, 1), (2, 3, 2)]


def _replace_level(D: TruncatedNuSet, level: int, fibers) -> TruncatedNuSet:
    levels = list(D.levels)
    levels[level] = LevelFamily(level, fibers)
    return TruncatedNuSet(D.nu, tuple(levels))


def _accepted(D: TruncatedNuSet, evaluator=None) -> bool:
    try:
        build_tower(D.nu, D.levels, evaluator)
    except StageError:
        return False
    return True


# ============================================================================
# 正常系
# ============================================================================


def test_init_bundle():
    bundle = init_bundle(3)
    assert bundle.level == 0
    assert bundle.fullframe_keys(0) == ("*",)
    assert bundle.is_open
    assert bundle.certificates_hold
    assert bundle.to_nuset() == TruncatedNuSet(3)


def test_tower_accepts_every_level(square_tower):
    bundle = build_tower(2, square_tower.levels)
    assert bundle.level == 3
    assert bundle.certificates_hold
    assert COH2_NOTE in bundle.notes
    assert bundle.to_nuset() == square_tower


def test_first_level_has_no_second_order_note(square_nuset):
    bundle = build_level(init_bundle(2), square_nuset.levels[0])
    assert bundle.notes == ()
    assert bundle.fullframe_keys(1) == ("(*;[#a|#a])", "(*;[#a|#b])", "(*;[#b|#a])", "(*;[#b|#b])")


def test_tables_agree_with_enumeration(square_tower):
    bundle = build_tower(2, square_tower.levels, lookahead=True)
    enumerator = Enumerator.of(square_tower)
    ev = enumerator.evaluator
    for n in range(4):
        for p in range(n + 1):
            assert list(bundle.frames[(n, p)]) == [d.key for d in enumerator.frames(n, p)]
    for n in range(3):
        for p in range(n + 1):
            for d in enumerator.frames(n, p):
                assert list(bundle.paintings[(n, p)][d.key]) == [c.key for c in enumerator.paintings(n, p, d)]
            for d in enumerator.frames(n + 1, p):
                for q in range(n - p + 1):
                    for eps in range(2):
                        assert bundle.restr_frame[(n, p)][(d.key, q, eps)] == ev.restr_frame(n, p, q, eps, d).key


def test_painting_restriction_table(square_tower):
    bundle = build_tower(2, square_tower.levels)
    table = bundle.restr_painting[(0, 0)]
    assert table[("*", "{[#a|#b];#ab}", 0, 0)] == "#a"
    assert table[("*", "{[#a|#b];#ab}", 0, 1)] == "#b"
    assert len(table) == 4 * 2


def test_table_sizes(square_tower):
    closed = build_tower(2, square_tower.levels).table_sizes()
    assert closed["painting"] == 2 + (4 + 4) + (16 + 16 + 16)
    assert closed["restr_frame"] == 2 + (4 + 16 * 2)
    assert closed["coh_frame"] == 1
    assert closed["coh_painting"] == 1

    opened = build_tower(2, square_tower.levels, lookahead=True).table_sizes()
    assert opened["painting"] == closed["painting"]
    assert opened["coh_frame"] == 3
    assert opened["frame"] > closed["frame"]


def test_last_level_is_closed(square_tower):
    bundle = build_tower(2, square_tower.levels)
    assert not bundle.is_open
    assert (3, 0) not in bundle.frames
    assert (2, 0) not in bundle.restr_frame
    assert [t.note for t in bundle.trace if t.level == 2 and t.stage is Stage.FRAME_AND_RESTR_FRAME] == [CLOSED_NOTE]


def test_closed_bundle_cannot_be_extended(square_nuset, square_tower):
    bundle = build_tower(2, square_nuset.levels)
    with pytest.raises(StageError) as excinfo:
        build_level(bundle, square_tower.levels[2])
    assert excinfo.value.stage == "stage 1 FRAME"
    assert "closed at level 2" in str(excinfo.value)


@pytest.mark.parametrize(
    ("nu", "depth", "max_fiber"),
    [(1, 3, 2), (2, 2, 3), (2, 3, 1), (2, 3, 2), (2, 3, 3)],
)
def test_generated_towers_build(generated, nu, depth, max_fiber):
    D = generated(nu, depth, max_fiber, 7)
    bundle = build_tower(nu, D.levels)
    assert bundle.level == depth
    assert bundle.certificates_hold
    assert not bundle.is_open
    assert bundle.to_nuset() == D


def test_nu_1_coherence_certificates(singleton_tower):
    D = singleton_tower(1, 2, 4)
    bundle = build_tower(1, D.levels)
    assert bundle.coh_painting
    assert bundle.certificates_hold


def test_build_level_is_a_fold(square_nuset):
    b0 = init_bundle(2)
    b1 = build_level(b0, square_nuset.levels[0])
    assert build_level(b1, square_nuset.levels[1]) == build_tower(2, square_nuset.levels, lookahead=True)
    assert build_level(b1, square_nuset.levels[1], lookahead=False) == build_tower(2, square_nuset.levels)


@pytest.mark.parametrize(("nu", "depth", "max_fiber"), [(1, 3, 3), (2, 2, 2), (2, 3, 2)])
def test_rebuild_after_serialization_is_identical(generated, nu, depth, max_fiber):
    D = generated(nu, depth, max_fiber, 11)
    bundle = build_tower(nu, D.levels)

    text = dumps_canonical(nuset_to_document(D))
    again = build_tower(nu, document_to_nuset(parse_document(text)).levels)

    assert again == bundle
    assert again.table_sizes() == bundle.table_sizes()
    for table in ("frames", "paintings", "restr_frame", "restr_painting"):
        assert getattr(again, table) == getattr(bundle, table)
    assert [t.line() for t in again.trace] == [t.line() for t in bundle.trace]


# ============================================================================
# 失敗系
# ============================================================================


def test_swapped_stages_fail_on_the_missing_prerequisite(square_nuset):
    stages = list(DEFAULT_STAGES)
    stages[2], stages[3] = stages[3], stages[2]
    with pytest.raises(StageError) as excinfo:
        build_tower(2, square_nuset.levels, stages=stages)
    assert excinfo.value.stage == "stage 4 painting"
    assert excinfo.value.level == 0
    assert "frames_next" in excinfo.value.edge


def test_stale_family_is_rejected(square_nuset):
    D = _replace_level(square_nuset, 1, {"(*;[#a|#a])": ("aa",), "(*;[#a|#b])": ("ab",)})
    with pytest.raises(StageError) as excinfo:
        build_tower(2, D.levels)
    assert excinfo.value.stage == Stage.FRAME_AND_RESTR_FRAME.label
    assert excinfo.value.level == 1
    assert "E keyed on a stale frame set" in str(excinfo.value)


def test_unsorted_fiber_is_rejected(square_nuset):
    D = _replace_level(square_nuset, 0, {"*": ("b", "a")})
    with pytest.raises(StageError, match="not sorted and duplicate free"):
        build_tower(2, D.levels)


@pytest.mark.parametrize(
    ("lookahead", "stage"),
    [(True, "stage 3 frame+restr_FRAME"), (False, "stage 7 restr_painting")],
)
def test_ghost_face_is_stopped(square_nuset, lookahead, stage):
    with pytest.raises(StageError) as excinfo:
        build_tower(2, square_nuset.levels, GhostEvaluator(2), lookahead=lookahead)
    assert excinfo.value.stage == stage
    assert excinfo.value.level == 1


def test_swapped_direction_makes_the_next_family_stale(square_tower):
    with pytest.raises(StageError) as excinfo:
        build_tower(2, square_tower.levels, FlipEvaluator(2))
    assert excinfo.value.stage == Stage.FRAME_AND_RESTR_FRAME.label
    assert excinfo.value.level == 2
    assert "stale frame set" in str(excinfo.value)


@pytest.mark.parametrize(
    ("level", "fibers"),
    [
        (1, {"(*;[#a|#a])": ("aa",), "(*;[#a|#b])": ("ab",), "(*;[#b|#a])": ("ba",)}),
        (1, {"(*;[#a|#a])": ("aa",), "(*;[#a|#b])": ("ab",), "(*;[#b|#a])": ("ba",), "(*;[#b|#b])": ("bb",),
             "(*;[#a|#c])": ("ac",)}),
        (0, {"*": ("a", "a")}),
        (0, {"*": ("a", "b c")}),
        (1, {"(*;[#a|#a])": ("aa",), "(*;[#a|#b])": ("ab", "ab"), "(*;[#b|#a])": ("ba",), "(*;[#b|#b])": ("bb",)}),
    ],
)
def test_builder_and_validator_reject_the_same_inputs(square_nuset, level, fibers):
    D = _replace_level(square_nuset, level, fibers)
    assert not validate(D).is_valid
    with pytest.raises(StageError):
        build_tower(2, D.levels)


@pytest.mark.parametrize("seed", range(20))
def test_redirected_restriction_is_caught(generated, seed):
    D = generated(*SEEDED_SHAPES[seed % len(SEEDED_SHAPES)], seed=100 + seed)
    mutant = redirect_mutant(D, seed)
    assert _accepted(D)
    assert not validate(D, mutant).is_valid, mutant
    assert not _accepted(D, mutant), mutant


@pytest.mark.parametrize("seed", range(20))
def test_builder_and_validator_agree_on_corrupted_families(generated, seed):
    D = generated(*SEEDED_SHAPES[seed % len(SEEDED_SHAPES)], seed=100 + seed)
    kind, level, broken = corrupt_family(D, seed)
    accepted = _accepted(broken)
    assert accepted == validate(broken).is_valid, (kind, level)
    if kind not in HARMLESS_AT_TOP or level < D.depth - 1:
        assert not accepted, (kind, level)


# ============================================================================
# 実行記録とジッパー
# ============================================================================


def test_every_stage_is_traced_per_level(square_nuset, caplog):
    with caplog.at_level(logging.INFO, logger="nuset.staged"):
        bundle = build_tower(2, square_nuset.levels)
    assert [t.stage.ordinal for t in bundle.trace] == list(range(1, 11)) * 2
    assert [t.level for t in bundle.trace] == [0] * 10 + [1] * 10
    assert any(r.getMessage().startswith("stage 3 frame+restr_FRAME | level 1") for r in caplog.records)


def test_trace_line_format():
    trace = StageTrace(Stage.COH_FRAME, 2, None, (), note="skipped")
    assert trace.line() == "stage 9 coh_frame | level 2 | ranks - | - | skipped"


def test_zipper_directions():
    up = RankZipper.upward(0, 2)
    assert up.pending == (0, 1, 2)
    down = RankZipper.downward(2, 0)
    assert down.focus == 2
    down = down.advance("t2").advance("t1")
    assert down.done_ranks == (2, 1)
    assert down.last() == "t1"
    assert down.advance("t0").is_complete
    assert down.advance("t0").tables() == {2: "t2", 1: "t1", 0: "t0"}

"""build_level の10ステージ

責務: 前のステージの出力だけを入力にして、次のレベルの表を1段ずつ作る。
      各ステージは消費するコンテキスト項目（依存束）を宣言し、欠けていれば
      ステージ名付きの StageError を送出する。

値そのもの（制限の結果）は RestrictionEvaluator が構造再帰で計算し、
ステージは前の束の表を引いて所属と整合性を検査する。

【先読み】
frame^{m+1,·} と、その上に乗る restr_frame^{m,·}・coh_frame^{m−1,·} は
次のファミリー E_{m+1} のための表。lookahead=False（最後のファミリー）では
作らずに閉じる。fullframe^{m+1} はファイバーの積で増えるため、次の
ファミリーが来ないレベルで列挙すると終わらない。
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple, Union

from ...concrete.domain.nuset import LevelFamily
from ...concrete.usecase.restriction import RestrictionEvaluator
from ...shared.domain.errors import NuSetError, StageError
from ...shared.domain.indices import coh_indices, face_indices
from ...shared.domain.values import STAR, Extend, FrameValue, Layered, PaintingValue, Top, layer_key
from ...shared.utils.canonical_key import is_valid_label
from ..domain.bundle import StageBundle
from ..domain.stage import DEPS_ENTRIES, DepsBundle, DepsKind, Stage, StageTrace
from ..domain.zipper import RankZipper

logger = logging.getLogger(__name__)

COH2_NOTE = "second-order frame coherence holds by decidable equality; not materialized"
CLOSED_NOTE = "closed: no family above this level"


# ============================================================================
# コンテキスト
# ============================================================================


class StageContext:
    """1回の build_level で受け渡すコンテキスト

    Attributes:
        level: 受け入れるファミリーのレベル m（= 前の束のレベル）
        evaluator: 制限の評価器
        lookahead: frame^{m+1,·} 側の表も作るか
        entries: 項目名 → 値
    """

    def __init__(self, level: int, evaluator: RestrictionEvaluator, lookahead: bool = True):
        self.level = level
        self.evaluator = evaluator
        self.lookahead = lookahead
        self.entries: Dict[str, object] = {}

    def view(self, stage: Stage, requires: Union[DepsKind, Tuple[str, ...]]) -> DepsBundle:
        """ステージが宣言した項目を集めたビューを返す

        Raises:
            StageError: 宣言した項目がまだ作られていない
        """
        kind = requires if isinstance(requires, DepsKind) else None
        names = DEPS_ENTRIES[kind] if kind is not None else requires
        missing = [name for name in names if name not in self.entries]
        if missing:
            raise StageError(
                stage.label, self.level,
                f"{missing[0]} -> {stage.title}",
                "prerequisite not built yet" + (f" ({kind.value})" if kind else ""),
            )
        return DepsBundle(kind, self.level, {name: self.entries[name] for name in names})

    def provide(self, name: str, value) -> None:
        self.entries[name] = value

    def fail(self, stage: Stage, edge: str, detail: str = "") -> StageError:
        return StageError(stage.label, self.level, edge, detail)


@dataclass(frozen=True)
class StageStep:
    """ステージ・消費する項目・本体の組（並べ替えはテスト用のフック）"""
    stage: Stage
    requires: Union[DepsKind, Tuple[str, ...]]
    run: Callable[[StageContext, DepsBundle], StageTrace]


# ============================================================================
# painting^{m,·} のメモ（前の束の表と E_m だけから作る）
# ============================================================================


class _PaintingMemo:
    """painting^{m,p}(d)（d ∈ frame^{m,p}）を必要になった分だけ作る"""

    def __init__(self, bundle: StageBundle, family: LevelFamily):
        self.bundle = bundle
        self.family = family
        self.m = family.level
        self._memo: Dict[Tuple[int, str], Tuple[PaintingValue, ...]] = {}

    def paintings(self, p: int, d: FrameValue) -> Tuple[PaintingValue, ...]:
        cached = self._memo.get((p, d.key))
        if cached is not None:
            return cached
        if p == self.m:
            result = tuple(Top(x) for x in self.family.fiber(d.key))
        else:
            result = tuple(sorted(
                (Layered(l, c) for l in self._layers(p, d) for c in self.paintings(p + 1, Extend(d, l))),
                key=lambda c: c.key,
            ))
        self._memo[(p, d.key)] = result
        return result

    def _layers(self, p: int, d: FrameValue):
        """layer^{m−1,p}(d): restr_frame^{m−1,p} と painting^{m−1,p} の表を引く"""
        restr = self.bundle.restr_frame[(self.m - 1, p)]
        below = self.bundle.paintings[(self.m - 1, p)]
        nu = self.bundle.nu
        choices = [tuple(below[restr[(d.key, 0, eps)]].values()) for eps in range(nu)]
        return sorted(itertools.product(*choices), key=layer_key)


# ============================================================================
# 1–2. 仕様ステージ
# ============================================================================


def frame_spec(ctx: StageContext, deps: DepsBundle) -> StageTrace:
    stage = Stage.FRAME_SPEC
    bundle: StageBundle = deps["bundle"]
    m = ctx.level
    spec = {}
    for p in range(m + 1):
        if (m, p) not in bundle.frames:
            detail = "frame table missing from the previous level"
            if not bundle.is_open:
                detail += f" (bundle was closed at level {bundle.level})"
            raise ctx.fail(stage, f"bundle -> frame^{m},{p}", detail)
        spec[p] = frozenset(bundle.frames[(m, p)])
    ctx.provide("frame_spec", spec)
    return StageTrace(stage, m, (0, m), ((f"frame^{m}", sum(len(s) for s in spec.values())),))


def painting_spec(ctx: StageContext, deps: DepsBundle) -> StageTrace:
    stage = Stage.PAINTING_SPEC
    bundle: StageBundle = deps["bundle"]
    m = ctx.level
    spec = {p: tuple(bundle.frames[(m, p)]) for p in deps["frame_spec"]}
    ctx.provide("painting_spec", spec)
    return StageTrace(stage, m, (0, m), ((f"painting^{m} domains", sum(len(s) for s in spec.values())),))


# ============================================================================
# 3. frame^{m+1,·} と restr_frame^{m,·} (q=0)
# ============================================================================


def frame_and_restr_frame(ctx: StageContext, deps: DepsBundle) -> StageTrace:
    stage = Stage.FRAME_AND_RESTR_FRAME
    bundle: StageBundle = deps["bundle"]
    family: LevelFamily = deps["E"]
    m = ctx.level
    _check_family(ctx, stage, family, deps["frame_spec"][m])

    memo = _PaintingMemo(bundle, family)
    ctx.provide("painting_memo", memo)
    if not ctx.lookahead:
        ctx.provide("frames_next", {})
        ctx.provide("restr_frame_base", {})
        return StageTrace(stage, m, (m, m), (("E keys", len(family.fibers)),), note=CLOSED_NOTE)

    base: Dict[Tuple[int, str, int], str] = {}
    zipper: RankZipper = RankZipper.upward(0, m + 1)
    zipper = zipper.advance({STAR.key: STAR})
    while not zipper.is_complete:
        p = zipper.focus - 1
        targets = bundle.frames[(m, p)]
        extended: List[FrameValue] = []
        for d in zipper.last().values():
            choices = []
            for eps in range(bundle.nu):
                rd = _restr_frame(ctx, stage, m, p, 0, eps, d)
                if rd.key not in targets:
                    raise ctx.fail(stage, f"restr_FRAME^{m},{p} -> frame^{m},{p}", f"face {eps} of {d.key} is {rd.key}")
                base[(p, d.key, eps)] = rd.key
                choices.append(memo.paintings(p, targets[rd.key]))
            extended.extend(Extend(d, l) for l in sorted(itertools.product(*choices), key=layer_key))
        zipper = zipper.advance({f.key: f for f in sorted(extended, key=lambda f: f.key)})
        logger.debug("frame^%d,%d: %d frames", m + 1, p + 1, len(extended))

    frames_next = zipper.tables()
    ctx.provide("frames_next", frames_next)
    ctx.provide("restr_frame_base", base)
    return StageTrace(
        stage, m, (0, m + 1),
        ((f"frame^{m + 1}", sum(len(t) for t in frames_next.values())), (f"restr_frame^{m} q=0", len(base))),
    )


def _check_family(ctx: StageContext, stage: Stage, family: LevelFamily, expected: frozenset) -> None:
    m = ctx.level
    if family.level != m:
        raise ctx.fail(stage, f"E -> frame^{m},{m}", f"family of level {family.level} offered at level {m}")
    actual = set(family.fibers)
    if actual != expected:
        missing = sorted(expected - actual)
        extra = sorted(actual - expected)
        sample = (missing or extra)[0]
        raise ctx.fail(
            stage, f"E_{m} -> frame^{m},{m}",
            f"E keyed on a stale frame set ({len(missing)} missing, {len(extra)} unexpected, e.g. {sample})",
        )
    for key, labels in family.fibers.items():
        labels = list(labels)
        if not all(is_valid_label(x) for x in labels):
            raise ctx.fail(stage, f"E_{m} fibers", f"invalid label in fiber {key}")
        if len(set(labels)) != len(labels) or labels != sorted(labels):
            raise ctx.fail(stage, f"E_{m} fibers", f"fiber {key} is not sorted and duplicate free")


# ============================================================================
# 4. painting^{m,·}
# ============================================================================


def painting(ctx: StageContext, deps: DepsBundle) -> StageTrace:
    stage = Stage.PAINTING
    bundle: StageBundle = deps["bundle"]
    memo: _PaintingMemo = deps["painting_memo"]
    m = ctx.level
    zipper: RankZipper = RankZipper.downward(m, 0)
    while not zipper.is_complete:
        p = zipper.focus
        table = {}
        for dkey, d in bundle.frames[(m, p)].items():
            table[dkey] = {c.key: c for c in memo.paintings(p, d)}
        zipper = zipper.advance(table)
    paintings = zipper.tables()
    ctx.provide("paintings", paintings)
    total = sum(len(cs) for t in paintings.values() for cs in t.values())
    return StageTrace(stage, m, (0, m), ((f"painting^{m}", total),))


# ============================================================================
# 5–6. restr_PAINTING の仕様と restr_frame^{m,·} の全表
# ============================================================================


def restr_painting_spec(ctx: StageContext, deps: DepsBundle) -> StageTrace:
    stage = Stage.RESTR_PAINTING_SPEC
    bundle: StageBundle = deps["bundle"]
    m = ctx.level
    spec = {p: tuple(face_indices(m - 1, p, bundle.nu)) for p in range(m)}
    ctx.provide("restr_painting_spec", spec)
    return StageTrace(stage, m, (0, m - 1) if m else None, ((f"restr_painting^{m - 1} faces", sum(map(len, spec.values()))),))


def restr_frame_and_coh_frame(ctx: StageContext, deps: DepsBundle) -> StageTrace:
    stage = Stage.RESTR_FRAME_AND_COH_FRAME
    bundle: StageBundle = deps["bundle"]
    frames_next = deps["frames_next"]
    base = deps["restr_frame_base"]
    m = ctx.level
    if not ctx.lookahead:
        ctx.provide("restr_frame", {})
        ctx.provide("coh_frame_spec", {})
        return StageTrace(stage, m, None, (), note=CLOSED_NOTE)

    tables = {}
    for p in range(m + 1):
        targets = bundle.frames[(m, p)]
        table = {}
        for d in frames_next[p].values():
            for f in face_indices(m, p, bundle.nu):
                rd = _restr_frame(ctx, stage, m, p, f.q, f.eps, d)
                if rd.key not in targets:
                    raise ctx.fail(stage, f"restr_frame^{m},{p} -> frame^{m},{p}", f"q={f.q} eps={f.eps} of {d.key} is {rd.key}")
                if f.q == 0 and base[(p, d.key, f.eps)] != rd.key:
                    raise ctx.fail(stage, f"restr_frame^{m},{p} -> {Stage.FRAME_AND_RESTR_FRAME.title}", f"q=0 face of {d.key} changed")
                table[(d.key, f.q, f.eps)] = rd.key
        tables[p] = table
    coh_spec = {p: tuple(coh_indices(m - 1, p, bundle.nu)) for p in range(m)}
    ctx.provide("restr_frame", tables)
    ctx.provide("coh_frame_spec", coh_spec)
    return StageTrace(
        stage, m, (0, m),
        ((f"restr_frame^{m}", sum(len(t) for t in tables.values())), (f"coh_frame^{m - 1} indices", sum(map(len, coh_spec.values())))),
    )


# ============================================================================
# 7–8. restr_painting^{m−1,·} と coh_PAINTING の仕様
# ============================================================================


def restr_painting(ctx: StageContext, deps: DepsBundle) -> StageTrace:
    stage = Stage.RESTR_PAINTING
    bundle: StageBundle = deps["bundle"]
    paintings = deps["paintings"]
    spec = deps["restr_painting_spec"]
    m = ctx.level
    tables = {}
    for p, faces in spec.items():
        frame_restr = bundle.restr_frame[(m - 1, p)]
        below = bundle.paintings[(m - 1, p)]
        table = {}
        for dkey, cs in paintings[p].items():
            for c in cs.values():
                for f in faces:
                    rdkey = frame_restr.get((dkey, f.q, f.eps))
                    if rdkey is None:
                        raise ctx.fail(stage, f"restr_frame^{m - 1},{p} -> restr_painting^{m - 1},{p}", f"no face q={f.q} eps={f.eps} of {dkey}")
                    rc = _restr_painting(ctx, stage, m - 1, p, f.q, f.eps, c)
                    if rc.key not in below.get(rdkey, {}):
                        raise ctx.fail(
                            stage, f"restr_painting^{m - 1},{p} -> painting^{m - 1},{p}",
                            f"q={f.q} eps={f.eps} of {c.key} is {rc.key}, not over {rdkey}",
                        )
                    table[(dkey, c.key, f.q, f.eps)] = rc.key
        tables[p] = table
    ctx.provide("restr_painting", tables)
    return StageTrace(stage, m, (0, m - 1) if m else None, ((f"restr_painting^{m - 1}", sum(len(t) for t in tables.values())),))


def coh_painting_spec(ctx: StageContext, deps: DepsBundle) -> StageTrace:
    stage = Stage.COH_PAINTING_SPEC
    m = ctx.level
    nu = deps["bundle"].nu
    spec = {p: tuple(coh_indices(m - 2, p, nu)) for p in range(m - 1)}
    ctx.provide("coh_painting_spec", spec)
    return StageTrace(stage, m, (0, m - 2) if m >= 2 else None, ((f"coh_painting^{m - 2} indices", sum(map(len, spec.values()))),))


# ============================================================================
# 9–10. 整合性の証明書
# ============================================================================


def coh_frame(ctx: StageContext, deps: DepsBundle) -> StageTrace:
    """coh_frame^{m−1,p}: d ∈ frame^{m+1,p} 上で2つの合成を表引きで比べる"""
    stage = Stage.COH_FRAME
    bundle: StageBundle = deps["bundle"]
    frames_next = deps["frames_next"]
    inner_tables = deps["restr_frame"]
    m = ctx.level
    certificates = {}
    checks = 0
    for p, indices in deps["coh_frame_spec"].items():
        inner = inner_tables[p]
        outer = bundle.restr_frame[(m - 1, p)]
        edge = f"coh_frame^{m - 1},{p}"
        for dkey in frames_next[p]:
            for coh in indices:
                checks += 1
                try:
                    lhs = outer[(inner[(dkey, coh.r, coh.omega)], coh.q, coh.eps)]
                    rhs = outer[(inner[(dkey, coh.q + 1, coh.eps)], coh.r, coh.omega)]
                except KeyError as e:
                    raise ctx.fail(stage, edge, f"restr_frame table has no entry {e.args[0]}") from None
                if lhs != rhs:
                    raise ctx.fail(stage, edge, f"{_describe(coh)} on {dkey}: {lhs} != {rhs}")
        certificates[p] = True
    ctx.provide("coh_frame", certificates)
    return StageTrace(
        stage, m, (0, m - 1) if certificates else None, ((f"coh_frame^{m - 1} checks", checks),),
        note=COH2_NOTE if m else "",
    )


def coh_painting(ctx: StageContext, deps: DepsBundle) -> StageTrace:
    """coh_painting^{m−2,p}: c ∈ painting^{m,p} 上で2つの合成を表引きで比べる"""
    stage = Stage.COH_PAINTING
    bundle: StageBundle = deps["bundle"]
    paintings = deps["paintings"]
    inner_tables = deps["restr_painting"]
    m = ctx.level
    certificates = {}
    checks = 0
    for p, indices in deps["coh_painting_spec"].items():
        inner = inner_tables[p]
        inner_frame = bundle.restr_frame[(m - 1, p)]
        outer = bundle.restr_painting[(m - 2, p)]
        edge = f"coh_painting^{m - 2},{p}"
        for dkey, cs in paintings[p].items():
            for ckey in cs:
                for coh in indices:
                    checks += 1
                    try:
                        lhs = outer[(
                            inner_frame[(dkey, coh.r, coh.omega)],
                            inner[(dkey, ckey, coh.r, coh.omega)],
                            coh.q, coh.eps,
                        )]
                        rhs = outer[(
                            inner_frame[(dkey, coh.q + 1, coh.eps)],
                            inner[(dkey, ckey, coh.q + 1, coh.eps)],
                            coh.r, coh.omega,
                        )]
                    except KeyError as e:
                        raise ctx.fail(stage, edge, f"restriction table has no entry {e.args[0]}") from None
                    if lhs != rhs:
                        raise ctx.fail(stage, edge, f"{_describe(coh)} on {ckey}: {lhs} != {rhs}")
        certificates[p] = True
    ctx.provide("coh_painting", certificates)
    return StageTrace(stage, m, (0, m - 2) if m >= 2 else None, ((f"coh_painting^{m - 2} checks", checks),))


# ============================================================================
# 補助
# ============================================================================


def _restr_frame(ctx: StageContext, stage: Stage, n: int, p: int, q: int, eps: int, d: FrameValue) -> FrameValue:
    try:
        return ctx.evaluator.restr_frame(n, p, q, eps, d)
    except NuSetError as e:
        raise ctx.fail(stage, f"restr_frame^{n},{p}", str(e)) from e


def _restr_painting(ctx: StageContext, stage: Stage, n: int, p: int, q: int, eps: int, c: PaintingValue) -> PaintingValue:
    try:
        return ctx.evaluator.restr_painting(n, p, q, eps, c)
    except NuSetError as e:
        raise ctx.fail(stage, f"restr_painting^{n},{p}", str(e)) from e


def _describe(coh) -> str:
    return f"q={coh.q} r={coh.r} eps={coh.eps} omega={coh.omega}"


DEFAULT_STAGES: Tuple[StageStep, ...] = (
    StageStep(Stage.FRAME_SPEC, ("bundle",), frame_spec),
    StageStep(Stage.PAINTING_SPEC, ("bundle", "frame_spec"), painting_spec),
    StageStep(Stage.FRAME_AND_RESTR_FRAME, DepsKind.RESTR, frame_and_restr_frame),
    StageStep(Stage.PAINTING, DepsKind.FULL_RESTR, painting),
    StageStep(Stage.RESTR_PAINTING_SPEC, ("bundle", "paintings"), restr_painting_spec),
    StageStep(Stage.RESTR_FRAME_AND_COH_FRAME, DepsKind.COH, restr_frame_and_coh_frame),
    StageStep(Stage.RESTR_PAINTING, DepsKind.FULL_COH, restr_painting),
    StageStep(Stage.COH_PAINTING_SPEC, ("bundle", "restr_painting", "coh_frame_spec"), coh_painting_spec),
    StageStep(Stage.COH_FRAME, DepsKind.COH2, coh_frame),
    StageStep(Stage.COH_PAINTING, DepsKind.FULL_COH2, coh_painting),
)

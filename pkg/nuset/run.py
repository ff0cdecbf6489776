"""nuset プログラマブルAPI

CLI (main.py) やテストから呼び出すためのインターフェース。
各関数は表示をせず、結果オブジェクトを返す。

【関数一覧】
- signature_lines: E_0..E_K のシグネチャ
- enumerate_document: フレームの列挙とファイバーサイズ
- check_document: 妥当性検査（インデックス形式は validate、ファイバー形式は check_identities）
- convert_document / dot_document: 形式の変換
- coherence_sweep: 整合性法則の記号的な全数検査
- generate_document: シード付きランダム生成
- build_document: 段階的ビルダーでの構築
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .concrete.domain.nuset import TruncatedNuSet
from .concrete.usecase.enumeration import Enumerator
from .concrete.usecase.validation import validate
from .fibred.domain.fibred_set import FibredSet
from .fibred.usecase.identities import check_identities
from .fibred.usecase.to_fibred import to_fibred
from .fibred.usecase.to_indexed import to_indexed
from .generator.domain.generator_config import GeneratorConfig
from .generator.usecase.generate_instance import generate_instance
from .infrastructure.documents import (
    FibredDocumentModel,
    IndexedDocumentModel,
    document_to_fibred,
    document_to_nuset,
    fibred_to_document,
    nuset_to_document,
)
from .infrastructure.dot_writer import fibred_to_dot
from .infrastructure.json_reader import Document
from .infrastructure.json_writer import dumps_canonical
from .shared.domain.errors import FibredError, IndexRangeError, StageError
from .shared.domain.indices import check_arity
from .staged.usecase.build import build_tower
from .symbolic.domain.coherence import CohSweepSummary
from .symbolic.usecase.formal_restriction import sweep_coh_refl
from .symbolic.usecase.render import render_signatures

logger = logging.getLogger(__name__)

INDEXED = "indexed"
FIBRED = "fibred"
INIT_TRACE = "init | level 0 | frame^0,0=1"


def document_kind(doc: Document) -> str:
    return INDEXED if isinstance(doc, IndexedDocumentModel) else FIBRED


def as_nuset(doc: Document) -> TruncatedNuSet:
    """どちらの形式でもインデックス形式にする

    Raises:
        FibredError: ファイバー形式が組み立てられない
    """
    if isinstance(doc, IndexedDocumentModel):
        return document_to_nuset(doc)
    return to_indexed(document_to_fibred(doc))


def as_fibred(doc: Document) -> FibredSet:
    """どちらの形式でもファイバー形式にする

    Raises:
        FibredError: インデックス形式が妥当でない
    """
    if isinstance(doc, FibredDocumentModel):
        return document_to_fibred(doc)
    return to_fibred(document_to_nuset(doc))


# ============================================================================
# signature
# ============================================================================


def signature_lines(nu: int, level: int, ascii: bool = False) -> List[str]:
    """E_0..E_level のシグネチャを1行ずつ

    Examples:
        >>> signature_lines(2, 1)
        ['E_0 : HSet', 'E_1 : E_0 × E_0 → HSet']
    """
    check_arity(nu)
    if level < 0:
        raise IndexRangeError(f"level must be non-negative, got {level}")
    return render_signatures(nu, level, ascii)


# ============================================================================
# enumerate
# ============================================================================


@dataclass
class EnumerateOutcome:
    """frame^{level,rank} の列挙結果

    Attributes:
        frames: (正準キー, ファイバーサイズ)。ランクが全フレームでないか、
            E_level がまだない場合のサイズは None
    """
    nu: int
    level: int
    rank: int
    frames: List[Tuple[str, Optional[int]]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nu": self.nu,
            "level": self.level,
            "rank": self.rank,
            "frames": [{"key": key, "fiber_size": size} for key, size in self.frames],
        }


def enumerate_document(doc: Document, level: int, rank: Optional[int] = None) -> EnumerateOutcome:
    """frame^{level,rank}（既定は全フレーム）をキー順に列挙する

    Raises:
        IndexRangeError: level が深さを超える、rank が level を超える
    """
    D = as_nuset(doc)
    rank = level if rank is None else rank
    if level < 0 or level > D.depth:
        raise IndexRangeError(f"level {level} not in [0, {D.depth}] for a document of depth {D.depth}")
    if rank < 0 or rank > level:
        raise IndexRangeError(f"rank {rank} not in [0, {level}]")
    enumerator = Enumerator.of(D)
    sized = rank == level and level < D.depth
    outcome = EnumerateOutcome(D.nu, level, rank)
    for d in enumerator.frames(level, rank):
        size = len(D.family(level).fibers.get(d.key, ())) if sized else None
        outcome.frames.append((d.key, size))
    return outcome


# ============================================================================
# check
# ============================================================================


@dataclass
class CheckOutcome:
    """check の結果

    Attributes:
        kind: "indexed" / "fibred"
        valid: 妥当か
        cell_counts: 次元ごとの要素数 |X_n|
        checks: 検査の種類 → 件数
        violations: 違反の説明
    """
    kind: str
    nu: int
    depth: int
    valid: bool
    cell_counts: List[int] = field(default_factory=list)
    checks: Dict[str, int] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def check_document(doc: Document) -> CheckOutcome:
    """ドキュメントの妥当性を検査する（例外は送出しない）

    ファイバー形式は面の恒等式に加えて、インデックス形式への組み立ても試す。
    """
    if isinstance(doc, IndexedDocumentModel):
        D = document_to_nuset(doc)
        report = validate(D)
        return CheckOutcome(
            kind=INDEXED,
            nu=D.nu,
            depth=D.depth,
            valid=report.is_valid,
            cell_counts=[family.element_count for family in D.levels],
            checks={"face": report.face_checks, "coherence": report.coherence_checks},
            violations=[v.describe() for v in report.violations],
        )

    X = document_to_fibred(doc)
    identities = check_identities(X)
    violations = [v.describe() for v in identities.violations]
    if identities.holds:
        try:
            to_indexed(X)
        except FibredError as e:
            violations.append(str(e))
    return CheckOutcome(
        kind=FIBRED,
        nu=X.nu,
        depth=X.depth,
        valid=not violations,
        cell_counts=X.cell_counts,
        checks={"identities": identities.checks},
        violations=violations,
    )


# ============================================================================
# convert
# ============================================================================


def convert_document(doc: Document, to: str) -> Document:
    """doc を to 形式の正準ドキュメントにする（同じ形式なら正準化のみ）

    Raises:
        FibredError: 入力が妥当でない
        ValueError: to が不明
    """
    if to == INDEXED:
        return nuset_to_document(as_nuset(doc))
    if to == FIBRED:
        return fibred_to_document(as_fibred(doc))
    raise ValueError(f"unknown target form {to!r}")


def dot_document(doc: Document, ascii: bool = False) -> str:
    """ファイバー形式の面関係を DOT で"""
    return fibred_to_dot(as_fibred(doc), ascii=ascii)


# ============================================================================
# coherence
# ============================================================================


def coherence_sweep(nu: int, level: int, paintings: bool = False) -> CohSweepSummary:
    """n ≤ level の全インデックスで整合性法則を記号的に検査する"""
    check_arity(nu)
    if level < 0:
        raise IndexRangeError(f"level must be non-negative, got {level}")
    return sweep_coh_refl(nu, level, paintings=paintings)


# ============================================================================
# generate
# ============================================================================


def generate_document(config: GeneratorConfig) -> Tuple[TruncatedNuSet, str]:
    """生成した ν-集合と、その正準JSON"""
    D = generate_instance(config)
    return D, dumps_canonical(nuset_to_document(D))


# ============================================================================
# build
# ============================================================================


@dataclass
class BuildOutcome:
    """build の結果

    Attributes:
        ok: すべてのレベルを受け入れ、証明書がすべて真
        levels: 受け入れたレベル数
        trace: ステージトレースの各行（先頭は初期束）
        error: 失敗したステージの説明
        table_sizes: 最終束の表の大きさ
        notes: 束に残った補足
    """
    ok: bool
    levels: int
    trace: List[str] = field(default_factory=list)
    error: Optional[str] = None
    failed_level: Optional[int] = None
    table_sizes: Dict[str, int] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def build_document(doc: Document) -> BuildOutcome:
    """doc のファミリーを段階的ビルダーで1レベルずつ受け入れる

    Raises:
        FibredError: ファイバー形式が組み立てられない
    """
    D = as_nuset(doc)
    try:
        bundle = build_tower(D.nu, D.levels)
    except StageError as e:
        logger.info("build failed: %s", e)
        # 失敗したレベルの直前までを組み直してトレースを残す
        partial = build_tower(D.nu, D.levels[:e.level])
        return BuildOutcome(
            ok=False,
            levels=partial.level,
            trace=[INIT_TRACE] + [t.line() for t in partial.trace],
            error=str(e),
            failed_level=e.level,
        )
    return BuildOutcome(
        ok=bundle.certificates_hold,
        levels=bundle.level,
        trace=[INIT_TRACE] + [t.line() for t in bundle.trace],
        table_sizes=bundle.table_sizes(),
        notes=list(bundle.notes),
    )

"""nuset エントリーポイント

有限ν-集合の計算カーネルのコマンドラインインターフェース。

Usage:
    python -m nuset.main <command> [options]

Examples:
    # シグネチャ（ν=2 の E_0..E_2）
    python -m nuset.main signature --nu 2 --level 2

    # ランダムインスタンスを生成して検査
    python -m nuset.main generate --nu 2 --depth 2 --seed 42 --output nuset_result/d.json
    python -m nuset.main check --input nuset_result/d.json

    # ファイバー形式へ変換（ν=1 は拡張半単体集合、ν=2 は半立方体集合）
    python -m nuset.main convert --input nuset_result/d.json --to fibred

    # 整合性法則の記号的な全数検査
    python -m nuset.main coherence --nu 2 --level 3

    # 段階的ビルダーのステージトレース
    python -m nuset.main build --input nuset_result/d.json --trace

終了コード:
    0: 妥当 / 全検査成功
    1: 意味的に妥当でない（違反の一覧を表示）
    2: 入力がパースできない、フラグが不正
"""

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from pydantic import ValidationError

from .generator.domain.generator_config import GeneratorConfig
from .infrastructure.config_loader import load_engine_settings
from .infrastructure.json_reader import read_document
from .infrastructure.json_writer import dumps_canonical, write_document, write_text
from .infrastructure.report_writer import RunLog, save_run_logs
from .run import (
    FIBRED,
    INDEXED,
    build_document,
    check_document,
    coherence_sweep,
    convert_document,
    document_kind,
    dot_document,
    enumerate_document,
    generate_document,
    signature_lines,
)
from .shared.domain.errors import DocumentError, FibredError, IndexRangeError, NuSetError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

RULE = "=" * 60

Settings = Dict[str, Any]


def _header(title: str) -> None:
    print(RULE)
    print(title)
    print(RULE)


def _emit_json(data: Any) -> None:
    sys.stdout.write(dumps_canonical(data))


def _write_logs(args: argparse.Namespace, settings: Settings, log: RunLog) -> None:
    """--log-dir が指定されたときだけ書き出す（値なしなら設定 report.log_dir）"""
    if getattr(args, "log_dir", None) is None:
        return
    saved = save_run_logs(log, args.log_dir or settings["report"]["log_dir"])
    if args.format == "text":
        print(f"ログ出力: {saved['summary']}")
        print(f"          {saved['details']}")


# ============================================================================
# signature
# ============================================================================


def cmd_signature(args: argparse.Namespace, settings: Settings) -> int:
    lines = signature_lines(args.nu, args.level, ascii=args.ascii)
    if args.format == "json":
        _emit_json({"nu": args.nu, "signatures": lines})
    else:
        for line in lines:
            print(line)
    return EXIT_OK


# ============================================================================
# enumerate
# ============================================================================


def cmd_enumerate(args: argparse.Namespace, settings: Settings) -> int:
    doc = read_document(args.input)
    outcome = enumerate_document(doc, args.level, args.rank)
    if args.format == "json":
        _emit_json(outcome.to_dict())
        return EXIT_OK

    _header(f"frame^{outcome.level},{outcome.rank} (nu={outcome.nu}): {len(outcome.frames)} frames")
    for key, size in outcome.frames:
        print(f"  {key}" if size is None else f"  {key}  |E|={size}")
    return EXIT_OK


# ============================================================================
# check
# ============================================================================


def cmd_check(args: argparse.Namespace, settings: Settings) -> int:
    doc = read_document(args.input)
    outcome = check_document(doc)

    _write_logs(args, settings, RunLog(
        command="check",
        title=f"check: {args.input}",
        passed=outcome.valid,
        facts=[("形式", outcome.kind), ("nu", outcome.nu), ("depth", outcome.depth),
               ("cells", " ".join(str(c) for c in outcome.cell_counts))]
              + [(f"{name} checks", count) for name, count in sorted(outcome.checks.items())],
        columns=("violation",),
        rows=[(v,) for v in outcome.violations],
    ))

    if args.format == "json":
        _emit_json(outcome.to_dict())
        return EXIT_OK if outcome.valid else EXIT_INVALID

    _header(f"check: {outcome.kind} (nu={outcome.nu}, depth={outcome.depth})")
    cells = " ".join(f"X_{n}={count}" for n, count in enumerate(outcome.cell_counts)) or "(empty)"
    print(f"  cells: {cells}")
    for name, count in sorted(outcome.checks.items()):
        print(f"  {name} checks: {count}")
    if args.trace:
        for n, count in enumerate(outcome.cell_counts):
            print(f"  [{n + 1}/{len(outcome.cell_counts)}] level {n}: {count} elements")

    if outcome.valid:
        print("✓ valid")
        return EXIT_OK
    print(f"✗ invalid: {len(outcome.violations)} violations")
    for v in outcome.violations:
        print(f"  - {v}")
    return EXIT_INVALID


# ============================================================================
# convert
# ============================================================================


def cmd_convert(args: argparse.Namespace, settings: Settings) -> int:
    doc = read_document(args.input)
    outcome = check_document(doc)
    if not outcome.valid:
        print(f"✗ refusing to convert an invalid {outcome.kind} document: {len(outcome.violations)} violations",
              file=sys.stderr)
        for v in outcome.violations:
            print(f"  - {v}", file=sys.stderr)
        return EXIT_INVALID

    if args.format == "dot":
        if args.to != FIBRED:
            raise DocumentError("--format dot requires --to fibred")
        text = dot_document(doc, ascii=args.ascii)
        if args.output:
            write_text(args.output, text)
        else:
            sys.stdout.write(text)
        return EXIT_OK

    converted = convert_document(doc, args.to)
    if args.output:
        write_document(converted, args.output)
        print(f"✓ {document_kind(doc)} -> {args.to}: {args.output}")
    else:
        sys.stdout.write(dumps_canonical(converted))
    return EXIT_OK


# ============================================================================
# coherence
# ============================================================================


def cmd_coherence(args: argparse.Namespace, settings: Settings) -> int:
    level = settings["sweep"]["max_level"] if args.level is None else args.level
    summary = coherence_sweep(args.nu, level, paintings=args.paintings)

    _write_logs(args, settings, RunLog(
        command="coherence",
        title=f"coherence: nu={args.nu}, n<={level}",
        passed=summary.all_hold,
        facts=[("nu", args.nu), ("max level", level), ("checked", summary.checked),
               ("failures", len(summary.failures))],
        columns=("level", "checked"),
        rows=sorted(summary.by_level.items()),
    ))

    if args.format == "json":
        _emit_json({
            "nu": args.nu,
            "max_level": level,
            "paintings": args.paintings,
            "checked": summary.checked,
            "by_level": {str(n): count for n, count in sorted(summary.by_level.items())},
            "failures": [f.describe() for f in summary.failures],
        })
        return EXIT_OK if summary.all_hold else EXIT_INVALID

    _header(f"coherence as reflexivity: nu={args.nu}, n<={level}")
    for n, count in sorted(summary.by_level.items()):
        print(f"  (nu={args.nu}, n={n}): {count} tuples")
    if summary.all_hold:
        print(f"✓ all {summary.checked} checks hold")
        return EXIT_OK
    print(f"✗ {len(summary.failures)} of {summary.checked} checks fail")
    for failure in summary.failures:
        print(f"  - {failure.describe()}")
    return EXIT_INVALID


# ============================================================================
# generate
# ============================================================================


def cmd_generate(args: argparse.Namespace, settings: Settings) -> int:
    config = GeneratorConfig(
        nu=args.nu,
        depth=args.depth,
        max_fiber=settings["generator"]["max_fiber"] if args.max_fiber is None else args.max_fiber,
        seed=settings["generator"]["seed"] if args.seed is None else args.seed,
    )
    D, text = generate_document(config)
    if not args.output:
        sys.stdout.write(text)
        return EXIT_OK

    write_text(args.output, text)
    if args.format == "json":
        _emit_json({
            "output": args.output,
            "levels": [
                {"dim": f.level, "fullframes": len(f.fibers), "elements": f.element_count} for f in D.levels
            ],
        })
        return EXIT_OK

    _header(f"generate: nu={config.nu}, depth={config.depth}, max_fiber={config.max_fiber}, seed={config.seed}")
    for family in D.levels:
        print(f"  [{family.level + 1}/{D.depth}] level {family.level}: "
              f"{len(family.fibers)} fullframes, {family.element_count} elements")
    print(f"✓ {args.output}")
    return EXIT_OK


# ============================================================================
# build
# ============================================================================


def cmd_build(args: argparse.Namespace, settings: Settings) -> int:
    doc = read_document(args.input)
    outcome = build_document(doc)

    _write_logs(args, settings, RunLog(
        command="build",
        title=f"build: {args.input}",
        passed=outcome.ok,
        facts=[("levels", outcome.levels), ("error", outcome.error or "-")]
              + [(name, size) for name, size in sorted(outcome.table_sizes.items())],
        columns=("trace",),
        rows=[(line,) for line in outcome.trace],
    ))

    if args.format == "json":
        _emit_json(outcome.to_dict())
        return EXIT_OK if outcome.ok else EXIT_INVALID

    _header(f"build: {args.input}")
    if args.trace:
        for line in outcome.trace:
            print(f"  {line}")
    for note in outcome.notes:
        print(f"  note: {note}")
    if outcome.ok:
        print(f"✓ built {outcome.levels} levels")
        return EXIT_OK
    if outcome.error:
        print(f"✗ failed at level {outcome.failed_level}: {outcome.error}")
    else:
        print("✗ coherence certificates do not all hold")
    return EXIT_INVALID


# ============================================================================
# パーサー
# ============================================================================

COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings], int]] = {
    "signature": cmd_signature,
    "enumerate": cmd_enumerate,
    "check": cmd_check,
    "convert": cmd_convert,
    "coherence": cmd_coherence,
    "generate": cmd_generate,
    "build": cmd_build,
}


def build_parser() -> argparse.ArgumentParser:
    """サブコマンドつきのパーサー"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config-dir", default="config", help="設定ファイルディレクトリ（デフォルト: config）")
    common.add_argument("--verbose", action="store_true", help="INFO ログを表示する")
    common.add_argument("--ascii", action="store_true", help="記号を ASCII で出力する")

    text_or_json = argparse.ArgumentParser(add_help=False)
    text_or_json.add_argument("--format", choices=("text", "json"), default="text", help="出力形式（デフォルト: text）")

    logged = argparse.ArgumentParser(add_help=False)
    logged.add_argument(
        "--log-dir", nargs="?", const="", default=None,
        help="Markdown / CSV のログを書き出すディレクトリ（値なしなら設定 report.log_dir）",
    )

    parser = argparse.ArgumentParser(
        prog="nuset",
        description="有限ν-集合の計算カーネル（ν=1: 拡張半単体集合、ν=2: 半立方体集合）",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python -m nuset.main signature --nu 2 --level 2
  python -m nuset.main generate --nu 2 --depth 2 --seed 42 --output d.json
  python -m nuset.main check --input d.json

Note:
  ν=1 の次元 n は古典的な (n−1)-単体に対応する（X_0 は拡張の集合）。
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("signature", parents=[common, text_or_json], help="E_0..E_K のシグネチャ")
    p.add_argument("--nu", type=int, required=True, help="アリティ（1以上）")
    p.add_argument("--level", type=int, required=True, help="最大レベル K")

    p = sub.add_parser("enumerate", parents=[common, text_or_json], help="フレームの列挙")
    p.add_argument("--input", required=True, help="入力ドキュメント（インデックス形式 / ファイバー形式）")
    p.add_argument("--level", type=int, required=True, help="レベル n")
    p.add_argument("--rank", type=int, default=None, help="ランク p（省略時: n、つまり全フレーム）")

    p = sub.add_parser("check", parents=[common, text_or_json, logged], help="妥当性検査")
    p.add_argument("--input", required=True, help="入力ドキュメント（種類は自動判定）")
    p.add_argument("--trace", action="store_true", help="レベルごとの集計を表示する")

    p = sub.add_parser("convert", parents=[common], help="インデックス形式 ⇄ ファイバー形式")
    p.add_argument("--input", required=True, help="入力ドキュメント")
    p.add_argument("--to", choices=(INDEXED, FIBRED), required=True, help="変換先の形式")
    p.add_argument("--output", default=None, help="出力ファイル（省略時: 標準出力）")
    p.add_argument("--format", choices=("json", "dot"), default="json", help="json（デフォルト）/ dot（--to fibred のみ）")

    p = sub.add_parser("coherence", parents=[common, text_or_json, logged], help="整合性法則の記号的な全数検査")
    p.add_argument("--nu", type=int, required=True, help="アリティ（1以上）")
    p.add_argument("--level", type=int, default=None, help="最大レベル（省略時: 設定 sweep.max_level）")
    p.add_argument("--paintings", action="store_true", help="painting 側の整合性も検査する")

    p = sub.add_parser("generate", parents=[common, text_or_json], help="シード付きランダム生成")
    p.add_argument("--nu", type=int, required=True, help="アリティ（1以上）")
    p.add_argument("--depth", type=int, required=True, help="生成するレベル数")
    p.add_argument("--max-fiber", type=int, default=None, help="ファイバーの最大サイズ（省略時: 設定 generator.max_fiber）")
    p.add_argument("--seed", type=int, default=None, help="64ビットのシード（省略時: 設定 generator.seed）")
    p.add_argument("--output", default=None, help="出力ファイル（省略時: 標準出力）")

    p = sub.add_parser("build", parents=[common, text_or_json, logged], help="段階的ビルダーで構築")
    p.add_argument("--input", required=True, help="入力ドキュメント")
    p.add_argument("--trace", action="store_true", help="ステージトレースを表示する")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """メイン関数（終了コードを返す）"""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    settings = load_engine_settings(args.config_dir)

    try:
        return COMMANDS[args.command](args, settings)
    except (DocumentError, IndexRangeError) as e:
        print(f"✗ {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        print(f"✗ invalid option {where}: {first['msg']}", file=sys.stderr)
        return EXIT_USAGE
    except FibredError as e:
        print(f"✗ {e}", file=sys.stderr)
        return EXIT_INVALID
    except NuSetError as e:
        print(f"✗ {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

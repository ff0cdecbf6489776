"""ドキュメント入出力・設定・ログ・コマンドラインのテスト"""

import json
from pathlib import Path

import pytest

from nuset.fibred.usecase.iso import iso_check
from nuset.generator.domain.generator_config import GeneratorConfig
from nuset.generator.usecase.generate_instance import generate_instance
from nuset.infrastructure.config_loader import load_engine_settings, load_jsonc
from nuset.infrastructure.documents import document_to_fibred, document_to_nuset, nuset_to_document
from nuset.infrastructure.json_reader import parse_document, read_document
from nuset.infrastructure.json_writer import dumps_canonical
from nuset.infrastructure.report_writer import RunLog, save_run_logs
from nuset.main import main
from nuset.run import (
    INIT_TRACE,
    build_document,
    check_document,
    convert_document,
    enumerate_document,
    signature_lines,
)
from nuset.shared.domain.errors import DocumentError, IndexRangeError

DANGLING_FIBRED = {
    "nu": 1,
    "dims": [
        {"dim": 0, "elements": ["v"], "faces": {}},
        {"dim": 1, "elements": ["e"], "faces": {"0,0": {"e": "z"}}},
    ],
}


@pytest.fixture
def square_file(tmp_path, square_nuset) -> Path:
    path = tmp_path / "square.json"
    path.write_text(dumps_canonical(nuset_to_document(square_nuset)), encoding="utf-8")
    return path


@pytest.fixture
def stale_file(tmp_path, square_nuset) -> Path:
    doc = nuset_to_document(square_nuset).model_dump()
    del doc["levels"][1]["fibers"]["(*;[#b|#b])"]
    path = tmp_path / "stale.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


# ============================================================================
# ドキュメント
# ============================================================================


def test_malformed_json_reports_position():
    with pytest.raises(DocumentError) as excinfo:
        parse_document('{"nu": 1,')
    assert (excinfo.value.line, excinfo.value.column) == (1, 10)


@pytest.mark.parametrize(
    "text",
    [
        '{"nu": 1}',
        '{"nu": 1, "levels": [], "dims": []}',
        "[1, 2]",
    ],
)
def test_document_kind_must_be_decidable(text):
    with pytest.raises(DocumentError):
        parse_document(text)


@pytest.mark.parametrize(
    ("text", "where"),
    [
        ('{"nu": 0, "levels": []}', "nu"),
        ('{"nu": 1, "levels": [{"dim": 1, "fibers": {}}]}', "<document>"),
        ('{"nu": 1, "levels": [{"dim": 0, "fibers": {"*": ["a-b"]}}]}', "levels.0.fibers"),
        ('{"nu": 1, "levels": [{"dim": 0, "fibers": {"(*": ["a"]}}]}', "levels.0.fibers"),
        ('{"nu": 1, "dims": [{"dim": 0, "elements": ["v"], "faces": {"0-0": {}}}]}', "dims.0.faces"),
    ],
)
def test_schema_violations(text, where):
    with pytest.raises(DocumentError, match=f"schema violation at {where}"):
        parse_document(text)


def test_read_missing_file(tmp_path):
    with pytest.raises(DocumentError, match="cannot read"):
        read_document(str(tmp_path / "absent.json"))


@pytest.mark.parametrize(("nu", "depth"), [(1, 3), (2, 2)])
def test_parse_then_print_is_the_identity(nu, depth):
    D = generate_instance(GeneratorConfig(nu=nu, depth=depth, seed=11))
    text = dumps_canonical(nuset_to_document(D))
    assert dumps_canonical(parse_document(text)) == text
    assert document_to_nuset(parse_document(text)) == D


def test_fibred_document_round_trip():
    doc = parse_document(json.dumps(DANGLING_FIBRED))
    X = document_to_fibred(doc)
    assert X.face(1, "e", 0, 0) == "z"
    assert json.loads(dumps_canonical(doc)) == DANGLING_FIBRED


# ============================================================================
# 生成
# ============================================================================


def test_generated_labels_and_counts():
    D = generate_instance(GeneratorConfig(nu=2, depth=2, max_fiber=1, seed=0))
    assert [D.family(k).element_count for k in range(2)] == [1, 1]
    assert D.family(0).fibers == {"*": ("e0_0000",)}


def test_generator_config_rejects_bad_fields():
    with pytest.raises(ValueError):
        GeneratorConfig(nu=0, depth=1)
    with pytest.raises(ValueError):
        GeneratorConfig(nu=1, depth=1, max_fiber=0)
    with pytest.raises(ValueError):
        GeneratorConfig(nu=1, depth=1, seed=2**64)


def test_generate_is_byte_identical(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for path in (first, second):
        assert main(["generate", "--nu", "2", "--depth", "2", "--seed", "9", "--output", str(path)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert first.read_bytes().endswith(b"}\n")


def test_generate_reads_seed_from_settings(tmp_path, capsys):
    config_dir = tmp_path / "config"
    config_dir.mkdir()
    (config_dir / "settings.jsonc").write_text('{"generator": {"seed": 9}} // 上書き\n', encoding="utf-8")
    assert main(["generate", "--nu", "1", "--depth", "2", "--config-dir", str(config_dir)]) == 0
    from_settings = capsys.readouterr().out
    assert main(["generate", "--nu", "1", "--depth", "2", "--seed", "9", "--max-fiber", "2"]) == 0
    assert capsys.readouterr().out == from_settings


# ============================================================================
# 設定
# ============================================================================


def test_settings_defaults_without_a_file(tmp_path):
    settings = load_engine_settings(str(tmp_path))
    assert settings["generator"] == {"max_fiber": 2, "seed": 42}
    assert settings["report"]["log_dir"] == "nuset_result/logs"
    assert settings["sweep"]["max_level"] == 4


def test_settings_fill_missing_keys(tmp_path):
    (tmp_path / "settings.jsonc").write_text(
        "{\n  // 行コメント\n  \"sweep\": {\"max_level\": 2},\n  /* ブロック\n     コメント */\n  \"generator\": {}\n}\n",
        encoding="utf-8",
    )
    settings = load_engine_settings(str(tmp_path))
    assert settings["sweep"]["max_level"] == 2
    assert settings["generator"]["seed"] == 42


def test_comment_markers_inside_strings_are_kept(tmp_path):
    path = tmp_path / "settings.jsonc"
    path.write_text(
        '{\n'
        '  // 出力先\n'
        '  "report": {"log_dir": "a//b/*c*/"}, /* 末尾 */\n'
        '  "note": "say \\"//hi\\""  // 引用符のエスケープ\n'
        '}\n',
        encoding="utf-8",
    )
    data = load_jsonc(str(path))
    assert data == {"report": {"log_dir": "a//b/*c*/"}, "note": 'say "//hi"'}
    assert load_engine_settings(str(tmp_path))["report"]["log_dir"] == "a//b/*c*/"


def test_repository_settings_parse():
    assert load_jsonc(str(Path(__file__).parent.parent / "config" / "settings.jsonc"))["sweep"]["max_level"] == 4


# ============================================================================
# ログ
# ============================================================================


def test_run_logs_are_markdown_and_csv(tmp_path):
    log = RunLog("check", "check: x.json", False, [("nu", 2)], ("violation",), [("missing key",)])
    saved = save_run_logs(log, str(tmp_path / "logs"))
    summary = Path(saved["summary"])
    details = Path(saved["details"])
    assert summary.name.startswith("check_summary_") and summary.suffix == ".md"
    assert details.name.startswith("check_details_") and details.suffix == ".csv"
    assert summary.read_text(encoding="utf-8").startswith("# check: x.json")
    assert "| nu | 2 |" in summary.read_text(encoding="utf-8")
    assert details.read_text(encoding="utf-8").splitlines() == ["violation", "missing key"]


def test_check_writes_logs(tmp_path, square_file):
    log_dir = tmp_path / "logs"
    assert main(["check", "--input", str(square_file), "--log-dir", str(log_dir)]) == 0
    assert len(list(log_dir.glob("check_summary_*.md"))) == 1
    assert len(list(log_dir.glob("check_details_*.csv"))) == 1


# ============================================================================
# プログラマブルAPI
# ============================================================================


def test_signature_lines():
    assert signature_lines(1, 1) == ["E_0 : HSet", "E_1 : E_0 → HSet"]
    with pytest.raises(IndexRangeError):
        signature_lines(0, 1)


def test_enumerate_fullframes_with_sizes(square_file):
    outcome = enumerate_document(read_document(str(square_file)), 1)
    assert outcome.frames == [
        ("(*;[#a|#a])", 1), ("(*;[#a|#b])", 1), ("(*;[#b|#a])", 1), ("(*;[#b|#b])", 1),
    ]
    top = enumerate_document(read_document(str(square_file)), 2)
    assert len(top.frames) == 16
    assert all(size is None for _, size in top.frames)
    with pytest.raises(IndexRangeError):
        enumerate_document(read_document(str(square_file)), 3)


def test_check_kinds(square_file):
    indexed = check_document(read_document(str(square_file)))
    assert indexed.valid
    assert set(indexed.checks) == {"face", "coherence"}
    fibred = check_document(parse_document(json.dumps(DANGLING_FIBRED)))
    assert not fibred.valid
    assert set(fibred.checks) == {"identities"}


def test_convert_round_trip(square_file):
    doc = read_document(str(square_file))
    fibred = convert_document(doc, "fibred")
    back = convert_document(fibred, "indexed")
    assert dumps_canonical(back) == square_file.read_text(encoding="utf-8")
    assert iso_check(document_to_nuset(doc), document_to_fibred(fibred))


def test_build_outcomes(square_file, stale_file):
    ok = build_document(read_document(str(square_file)))
    assert ok.ok
    assert ok.levels == 2
    assert ok.trace[0] == INIT_TRACE
    assert len(ok.trace) == 1 + 10 * 2

    failed = build_document(read_document(str(stale_file)))
    assert not failed.ok
    assert failed.failed_level == 1
    assert failed.levels == 1
    assert "stale frame set" in failed.error


# ============================================================================
# コマンドライン
# ============================================================================


def test_signature_command(capsys):
    assert main(["signature", "--nu", "2", "--level", "1", "--ascii", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["signatures"] == ["E_0 : HSet", "E_1 : E_0 * E_0 -> HSet"]


def test_exit_codes(tmp_path, square_file, stale_file):
    malformed = tmp_path / "bad.json"
    malformed.write_text('{"nu": 1,', encoding="utf-8")
    dangling = tmp_path / "dangling.json"
    dangling.write_text(json.dumps(DANGLING_FIBRED), encoding="utf-8")

    assert main(["check", "--input", str(square_file)]) == 0
    assert main(["check", "--input", str(stale_file)]) == 1
    assert main(["check", "--input", str(dangling)]) == 1
    assert main(["check", "--input", str(malformed)]) == 2
    assert main(["enumerate", "--input", str(square_file), "--level", "5"]) == 2
    assert main(["signature", "--nu", "0", "--level", "1"]) == 2
    assert main(["generate", "--nu", "1", "--depth", "1", "--max-fiber", "0"]) == 2
    assert main(["build", "--input", str(stale_file)]) == 1
    assert main(["convert", "--input", str(stale_file), "--to", "fibred"]) == 1


def test_bad_flags_exit_with_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit):
        main(["convert", "--input", "x.json", "--to", "simplicial"])


def test_malformed_input_message(tmp_path, capsys):
    malformed = tmp_path / "bad.json"
    malformed.write_text('{"nu": 1,', encoding="utf-8")
    assert main(["check", "--input", str(malformed)]) == 2
    assert "line 1, column 10" in capsys.readouterr().err


def test_check_json_output(square_file, capsys):
    assert main(["check", "--input", str(square_file), "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["valid"] is True
    assert out["cell_counts"] == [2, 4]


def test_convert_command_round_trip(tmp_path, square_file):
    fibred = tmp_path / "fibred.json"
    indexed = tmp_path / "indexed.json"
    assert main(["convert", "--input", str(square_file), "--to", "fibred", "--output", str(fibred)]) == 0
    assert main(["convert", "--input", str(fibred), "--to", "indexed", "--output", str(indexed)]) == 0
    assert indexed.read_text(encoding="utf-8") == square_file.read_text(encoding="utf-8")
    assert json.loads(fibred.read_text(encoding="utf-8"))["dims"][1]["faces"]["0,0"]["ab"] == "a"


def test_convert_to_dot(square_file, capsys):
    assert main(["convert", "--input", str(square_file), "--to", "fibred", "--format", "dot", "--ascii"]) == 0
    assert '"1:ab" -> "0:a" [label="d0,0"];' in capsys.readouterr().out
    assert main(["convert", "--input", str(square_file), "--to", "indexed", "--format", "dot"]) == 2


def test_coherence_command(capsys):
    assert main(["coherence", "--nu", "1", "--level", "2", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["checked"] == 1 + 4 + 10
    assert out["by_level"] == {"0": 1, "1": 4, "2": 10}
    assert out["failures"] == []


def test_build_trace(square_file, capsys):
    assert main(["build", "--input", str(square_file), "--trace"]) == 0
    out = capsys.readouterr().out
    assert INIT_TRACE in out
    assert "stage 10 coh_painting | level 1" in out
    assert "✓ built 2 levels" in out

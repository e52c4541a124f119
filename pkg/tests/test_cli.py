import json
import logging
from pathlib import Path

import click
import pytest
from click.testing import CliRunner

from Controller.pipeline import STAGES, CliRequest, run_pipeline
from main import depends, parse_args

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"
ORACLE = FIXTURES / "corpus_oracle.json"


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def test_parse_args_defaults():
    request = parse_args(["kotlin", "./sqlex", "result", "-d", "./out"])

    assert (request.lang, request.src, request.output) == ("kotlin", "./sqlex", "result")
    assert request.output_dir == "./out"
    assert request.format == "json" and request.granularity == "file"
    assert request.name_pattern == "dot"
    assert request.max_rounds == 5
    assert request.truth is None and not request.debug


def test_parse_args_flags():
    request = parse_args([
        "-f", "dot", "-s", "--show-language", "-m", "-p", "unix", "-i", "lib", "-i", "vendor",
        "--auto-include", "--max-rounds", "2", "kotlin", "src", "deps",
    ])

    assert request.format == "dot"
    assert request.strip_leading_path and request.show_language and request.emit_name_map
    assert request.name_pattern == "unix"
    assert request.includes == ["lib", "vendor"] and request.auto_include
    assert request.max_rounds == 2


def test_parse_args_requires_the_positionals():
    with pytest.raises(click.UsageError):
        parse_args(["kotlin", "src"])


def test_help_exits_cleanly():
    result = CliRunner().invoke(depends, ["-h"])

    assert result.exit_code == 0
    assert "--granularity" in result.output


def test_missing_arguments_are_a_usage_error():
    assert CliRunner().invoke(depends, []).exit_code == 2


def test_run_writes_outputs_and_reports_stage_times(tmp_path):
    result = CliRunner().invoke(depends, ["kotlin", str(CORPUS), "result", "-d", str(tmp_path), "-f", "dot", "-m"])

    assert result.exit_code == 0, result.output
    assert (tmp_path / "result.json").is_file()
    assert (tmp_path / "result.dot").is_file()
    assert (tmp_path / "result-map.json").is_file()
    for stage in STAGES:
        assert f"{stage}: " in result.output
    assert "Total: " in result.output


def test_structure_granularity_writes_entity_detail(tmp_path):
    result = CliRunner().invoke(depends, [
        "kotlin", str(CORPUS), "detail", "-d", str(tmp_path), "-g", "structure", "-s",
    ])

    assert result.exit_code == 0, result.output
    detail = json.loads((tmp_path / "detail.json").read_text(encoding="utf-8"))
    paths = {entity["location"]["path"] for entity in detail["entities"] if entity["kind"] == "File"}
    assert "com/example/app/App.kt" in paths


def test_truth_file_prints_the_accuracy(tmp_path):
    result = CliRunner().invoke(depends, ["kotlin", str(CORPUS), "result", "-d", str(tmp_path), "-t", str(ORACLE)])

    assert result.exit_code == 0, result.output
    assert '"precision": 1.0' in result.output
    assert '"perLanguagePair"' in result.output


def test_empty_source_directory_fails(tmp_path):
    result = CliRunner().invoke(depends, ["kotlin", str(tmp_path), "result", "-d", str(tmp_path / "out")])

    assert result.exit_code == 1
    assert "no source files found" in result.output
    assert "Total: " in result.output
    assert not (tmp_path / "out" / "result.json").exists()


def test_missing_source_directory_fails(tmp_path):
    exit_code, timing = run_pipeline(CliRequest("kotlin", str(tmp_path / "absent"), "result", output_dir=str(tmp_path)))

    assert exit_code == 1
    assert timing.total >= 0.0


def test_unknown_language_fails(tmp_path):
    result = CliRunner().invoke(depends, ["scala", str(CORPUS), "result", "-d", str(tmp_path)])

    assert result.exit_code == 1
    assert "Unknown language 'scala'" in result.output


def test_malformed_files_are_skipped(tmp_path):
    source = tmp_path / "src"
    source.mkdir()
    (source / "Good.kt").write_text("class Good\nclass User(val good: Good)\n", encoding="utf-8")
    (source / "Broken.kt").write_text("class Broken {\n", encoding="utf-8")

    exit_code, _ = run_pipeline(CliRequest("kotlin", str(source), "result", output_dir=str(tmp_path), granularity="structure"))

    assert exit_code == 0
    detail = json.loads((tmp_path / "result.json").read_text(encoding="utf-8"))
    names = {entity["qualifiedName"] for entity in detail["entities"]}
    assert "User" in names and "Broken" not in names
    assert [relation["kind"] for relation in detail["relations"]] == ["Contain", "Parameter"]

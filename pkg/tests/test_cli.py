import json

import pytest

from theta_forge.cli import (
    EXIT_FAILED,
    EXIT_INDEX,
    EXIT_NOT_ASSOCIATIVE,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    EXIT_UNKNOWN_CLAIM,
    main,
)


@pytest.fixture
def table_file(tmp_path):
    def write(text):
        path = tmp_path / "table.txt"
        path.write_text(text)
        return str(path)
    return write


def test_analyze_s3x(table_file, capsys):
    assert main(["analyze", table_file("3\n1 2 2\n2 2 2\n2 2 2\n")]) == EXIT_OK
    out = capsys.readouterr().out
    assert "theta classes          0|12" in out
    assert "theta* classes         012" in out


def test_analyze_z2_json(capsys):
    assert main(["analyze", "2:0110", "--json", "-"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["properties"]["group"] is True
    assert data["theta"] == "0 1"


def test_analyze_errors(table_file, capsys):
    assert main(["analyze", table_file("2\n0 1\n0 0\n")]) == EXIT_NOT_ASSOCIATIVE
    assert "witness" in capsys.readouterr().err
    assert main(["analyze", table_file("2\n0 x\n0 0\n")]) == EXIT_PARSE
    assert main(["analyze", table_file("2\n0 2\n0 0\n")]) == EXIT_INDEX


def test_construct(capsys):
    assert main(["construct", "2:0110", "--lambda", "2", "--p", "0,0"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "4" and len(lines) == 5
    assert main(["construct", "1:0", "--lambda", "1", "--p", "0", "--compact"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1:0"
    assert main(["construct", "3:122222222", "--theta-respecting", "--compact"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("6:")
    assert main(["construct", "2:0110", "--lambda", "1", "--p", "2"]) == EXIT_INDEX


def test_verify_pass_and_strict(capsys):
    assert main(["verify", "--claims", "lemma3,theorem1", "--max-order", "3", "--jobs", "1"]) == EXIT_OK
    assert main(["verify", "--claims", "lemma1", "--reading", "abstract_group", "--max-order", "2",
                 "--jobs", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "DISCREPANCY" in out and "2:0000" in out
    assert main(["verify", "--claims", "lemma1", "--reading", "abstract_group", "--max-order", "2",
                 "--strict", "--jobs", "1"]) == EXIT_FAILED


def test_verify_single_instance(capsys):
    assert main(["verify", "--claims", "lemma3", "--max-order", "1", "--json", "-", "--jobs", "1"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["claims"][0]["instances"] == 1
    assert set(data) == {"version", "command", "seed", "claims"}
    assert set(data["claims"][0]) >= {"id", "max_order", "instances", "failures", "elapsed_ms"}


def test_verify_unknown_claim():
    assert main(["verify", "--claims", "lemma9"]) == EXIT_UNKNOWN_CLAIM


def test_enumerate(capsys):
    assert main(["enumerate", "--order", "2", "--mode", "labeled"]) == EXIT_OK
    out = capsys.readouterr().out.strip().splitlines()
    assert out[-1] == "count: 8" and len(out) == 9
    assert main(["enumerate", "--order", "3", "--mode", "up_to_iso", "--count-only"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "count: 24"
    assert main(["enumerate", "--order", "1"]) == EXIT_OK
    assert capsys.readouterr().out.strip().splitlines() == ["1:0", "count: 1"]
    assert main(["enumerate", "--order", "7"]) == EXIT_PRECONDITION


def test_enumerate_shards(capsys):
    total = 0
    for i in range(3):
        main(["enumerate", "--order", "3", "--shard", f"{i}/3", "--count-only"])
        total += int(capsys.readouterr().out.split(":")[1])
    assert total == 113


def test_embed_demo(capsys):
    assert main(["embed-demo", "--window", "1024", "--samples", "50", "--seed", "0"]) == EXIT_OK
    assert "PASS" in capsys.readouterr().out
    assert main(["embed-demo", "--samples", "0", "--json", "-"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["claims"][0]["failures"] == [] and data["claims"][0]["instances"] == 0
    assert main(["embed-demo", "--window", "1"]) == EXIT_PRECONDITION


def test_envelopes_are_byte_identical(tmp_path):
    paths = []
    for jobs in ("1", "2"):
        path = tmp_path / f"r{jobs}.json"
        main(["verify", "--claims", "lemma1,hereditary,theorem2", "--max-order", "3", "--seed", "5",
              "--jobs", jobs, "--json", str(path)])
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_help_documents_exit_codes(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    assert "exit codes" in capsys.readouterr().out

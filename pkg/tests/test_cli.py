"""Tests for the cover-energy command line."""

import json

import pytest

from cover_energy.cli import run
from cover_energy.config import configure
from cover_energy.covering import CoverSet, check_characterization
from cover_energy.graph import new_graph
from cover_energy.verification import TrialResult, VerificationReport


@pytest.fixture(autouse=True)
def reset_settings():
    yield
    configure(None)


def _json(capsys):
    return json.loads(capsys.readouterr().out)


# ── gen ──────────────────────────────────────────────────────────────────────


def test_gen_length_two_star(capsys):
    assert run(["gen", "--family", "star", "--m", "2", "--ray-len", "2"]) == 0
    assert capsys.readouterr().out == "5\n0 1\n0 2\n1 3\n2 4\n"


def test_gen_json_to_file(tmp_path):
    out = tmp_path / "k13.json"
    assert run(["gen", "--family", "star", "--m", "3", "--format", "json", "-o", str(out)]) == 0
    assert json.loads(out.read_text()) == {"n": 4, "edges": [[0, 1], [0, 2], [0, 3]]}


def test_gen_random_is_reproducible(capsys):
    argv = ["gen", "--family", "random", "--n", "9", "--p", "0.4", "--seed", "42"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--family", "star"],
        ["gen", "--family", "path"],
        ["gen", "--family", "wheel", "--n", "4"],
        ["gen", "--family", "star", "--m", "1"],
        ["gen", "--family", "path", "--n", "3", "--format", "xml"],
    ],
)
def test_gen_usage_errors(argv, capsys):
    assert run(argv) == 1
    assert capsys.readouterr().err


def test_gen_rejects_negative_seed(capsys):
    assert run(["gen", "--family", "random", "--n", "6", "--p", "0.3", "--seed", "-4"]) == 1
    assert "seed must be >= 0" in capsys.readouterr().err


# ── mincover / energy / charpoly ─────────────────────────────────────────────


def test_mincover_seven_cycle(capsys):
    assert run(["mincover", "--family", "cycle", "--n", "7"]) == 0
    doc = _json(capsys)
    assert doc["kind"] == "3-covering"
    assert doc["size"] == 3
    assert doc["method"] == "exact"


def test_mincover_vertex_cover_bruteforce(capsys):
    argv = ["mincover", "--family", "path", "--n", "4", "--k", "2", "--method", "bruteforce"]
    assert run(argv) == 0
    assert _json(capsys)["members"] == [0, 2]


def test_mincover_from_file(tmp_path, capsys):
    path = tmp_path / "p5.g"
    path.write_text("5\n0 1\n0 2\n1 3\n2 4\n")
    assert run(["mincover", "--in", str(path)]) == 0
    assert _json(capsys)["members"] == [0]


def test_energy_of_length_two_star(capsys):
    assert run(["energy", "--family", "star", "--m", "2", "--ray-len", "2", "--cover", "0"]) == 0
    doc = _json(capsys)
    assert doc["energy"] == pytest.approx(5.962389, abs=1e-6)
    assert len(doc["eigenvalues"]) == 5
    assert doc["cover"] == [0]


def test_energy_uses_cover_from_json_input(tmp_path, capsys):
    path = tmp_path / "k12.json"
    path.write_text('{"n": 3, "edges": [[0, 1], [0, 2]], "cover": [0]}')
    assert run(["energy", "--in", str(path), "--eigen-method", "lapack"]) == 0
    assert _json(capsys)["energy"] == pytest.approx(3.0)


def test_energy_csv(capsys):
    assert run(["energy", "--family", "star", "--m", "3", "--min-cover", "--format", "csv"]) == 0
    header, row = capsys.readouterr().out.splitlines()
    assert header == "cover,n,energy,method"
    cover, n, value, method = row.split(",")
    assert (cover, n, method) == ("0", "4", "numeric")
    assert float(value) == pytest.approx(13**0.5)


def test_charpoly_length_two_star(capsys):
    assert run(["charpoly", "--family", "star", "--m", "2", "--ray-len", "2", "--min-cover"]) == 0
    doc = _json(capsys)
    assert doc["coefficients"] == [1, -1, -4, 2, 3, -1]
    assert doc["polynomial"] == "λ⁵ - λ⁴ - 4λ³ + 2λ² + 3λ - 1"


@pytest.mark.parametrize(
    "argv",
    [
        ["energy", "--family", "star", "--m", "3"],
        ["energy", "--family", "star", "--m", "3", "--cover", "0", "--min-cover"],
        ["energy", "--family", "star", "--m", "3", "--cover", "9"],
        ["energy", "--family", "star", "--m", "3", "--cover", "0", "--eigen-method", "qr"],
        ["charpoly"],
    ],
)
def test_cover_and_input_errors(argv):
    assert run(argv) == 1


def test_in_and_family_are_mutually_exclusive(tmp_path):
    path = tmp_path / "g.g"
    path.write_text("2\n0 1\n")
    assert run(["mincover", "--in", str(path), "--family", "path", "--n", "3"]) == 1


def test_missing_input_file_is_an_io_error(tmp_path, capsys):
    assert run(["mincover", "--in", str(tmp_path / "missing.g")]) == 2
    assert "Error" in capsys.readouterr().err


def test_malformed_input_file_is_a_usage_error(tmp_path):
    path = tmp_path / "bad.g"
    path.write_text("3\n0 7\n")
    assert run(["mincover", "--in", str(path)]) == 1


def test_non_utf8_input_file_is_a_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.g"
    path.write_bytes(b"\xff\xfe3\n0 1\n")
    assert run(["energy", "--in", str(path), "--cover", "0"]) == 1
    assert "not UTF-8" in capsys.readouterr().err


def test_min_cover_energy_equals_energy_of_the_printed_cover(capsys):
    graph = ["--family", "cycle", "--n", "7"]
    assert run(["mincover", *graph]) == 0
    members = _json(capsys)["members"]
    assert run(["energy", *graph, "--min-cover"]) == 0
    from_search = capsys.readouterr().out
    assert run(["energy", *graph, "--cover", ",".join(map(str, members))]) == 0
    assert capsys.readouterr().out == from_search


@pytest.mark.parametrize(
    "argv",
    [
        ["energy", "--family", "cycle", "--n", "8", "--min-cover"],
        ["charpoly", "--family", "star", "--m", "3", "--ray-len", "2", "--min-cover"],
        ["family-table", "--family", "star1", "--m-from", "3", "--m-to", "6"],
        ["discrepancy", "--m-from", "2", "--m-to", "4"],
    ],
)
def test_repeated_runs_print_identical_output(argv, capsys):
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first


# ── verify ───────────────────────────────────────────────────────────────────


def test_small_verification_run(tmp_path, capsys):
    records = tmp_path / "records.ndjson"
    argv = ["verify", "--trials", "25", "--seed", "7", "--max-n", "8", "--records", str(records)]
    assert run(argv) == 0
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    assert doc["passed"] is True
    assert doc["trials"] == 25
    assert "[25/25]" in captured.err
    assert len(records.read_text().splitlines()) == 25


def test_verification_counterexample_exits_3(mocker, capsys):
    g = new_graph(2, [(0, 1)])
    empty = CoverSet.of([])
    failing = TrialResult(
        index=0,
        p=0.5,
        graph=g,
        candidate=empty,
        min_cover=empty,
        superset=empty,
        reports=(check_characterization(g, empty),),
    )
    mocker.patch(
        "cover_energy.cli.run_verification",
        return_value=VerificationReport(seed=7, max_n=3, trials=(failing,)),
    )

    assert run(["verify", "--trials", "1"]) == 3
    captured = capsys.readouterr()
    assert json.loads(captured.out)["failed_trials"] == [0]
    assert "# trial 0" in captured.err
    assert captured.err.endswith("2\n0 1\n")


def test_verify_rejects_tiny_orders():
    assert run(["verify", "--trials", "1", "--max-n", "2"]) == 1


def test_verify_rejects_negative_seed(capsys):
    assert run(["verify", "--trials", "1", "--seed", "-1"]) == 1
    assert "seed must be >= 0" in capsys.readouterr().err


# ── family-table / discrepancy ───────────────────────────────────────────────


def test_family_table_csv(capsys):
    assert run(["family-table", "--family", "star3", "--m-from", "2", "--m-to", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "m,energy_closed,energy_numeric,abs_diff"
    assert [line.split(",")[0] for line in lines[1:]] == ["2", "3", "4"]


def test_family_table_rejects_unknown_family():
    assert run(["family-table", "--family", "star2"]) == 1


def test_discrepancy_json(capsys):
    assert run(["discrepancy", "--m-from", "2", "--m-to", "3"]) == 0
    doc = _json(capsys)
    assert doc["mismatches"] == 2
    assert [row["direct"] for row in doc["rows"]] == [-3996, -8667]


# ── Global options ───────────────────────────────────────────────────────────


def test_config_file_is_applied(tmp_path, capsys):
    path = tmp_path / "settings.yaml"
    path.write_text("max_bruteforce_n: 4\n")
    argv = ["--config", str(path), "mincover", "--family", "path", "--n", "6"]
    assert run([*argv, "--method", "bruteforce"]) == 1
    assert "exhaustive search supports n <= 4" in capsys.readouterr().err


def test_invalid_config_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("jacobi_tolerance: -1\n")
    assert run(["--config", str(path), "discrepancy", "--m-to", "3"]) == 1

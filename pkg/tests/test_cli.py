import json

import pytest

from sct.cli import main
from sct.fixtures import ACKERMANN_SOURCE


@pytest.fixture
def ack_file(tmp_path):
    path = tmp_path / "ackermann.sct"
    path.write_text(ACKERMANN_SOURCE)
    return str(path)


@pytest.fixture
def fixture_dir(tmp_path):
    assert main(["fixtures", "-o", str(tmp_path / "fx")]) == 0
    return tmp_path / "fx"


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestAnalyze:
    def test_ackermann(self, capsys, ack_file):
        code, report = run_json(capsys, ["analyze", ack_file])
        assert code == 0
        assert report["sct"] is True
        assert report["closure_size"] == 2
        assert [g["name"] for g in report["description"]["graphs"]] == [
            "tau0",
            "tau1",
            "tau2",
        ]

    def test_swap_program(self, capsys, tmp_path, fixture_dir):
        prog = tmp_path / "swap.sct"
        assert main(["synth", str(fixture_dir / "swap-graphs.json"), "-o", str(prog)]) == 0
        capsys.readouterr()
        code, report = run_json(capsys, ["analyze", str(prog)])
        assert code == 1
        assert report["sct"] is False
        assert report["counterexample"]["lasso"]["period"] == ["tau0", "tau0"]

    def test_missing_file(self, capsys):
        assert main(["analyze", "no-such-file.sct"]) == 2
        assert "error" in capsys.readouterr().err

    def test_parse_error_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.sct"
        bad.write_text("f(x) = if x then 1 else 2")
        assert main(["analyze", str(bad)]) == 2

    def test_byte_stable(self, capsys, ack_file):
        main(["analyze", ack_file])
        first = capsys.readouterr().out
        main(["analyze", ack_file])
        assert capsys.readouterr().out == first


class TestPipeline:
    def test_extract_synth_analyze(self, capsys, ack_file, tmp_path):
        graphs = tmp_path / "graphs.json"
        prog = tmp_path / "resynth.sct"
        assert main(["extract", ack_file, "-o", str(graphs)]) == 0
        data = json.loads(graphs.read_text())
        assert len(data["graphs"]) == 3
        assert main(["synth", str(graphs), "-o", str(prog)]) == 0
        code, report = run_json(capsys, ["analyze", str(prog), "--mode", "syntactic"])
        assert code == 0 and report["sct"] is True

    def test_extract_modes_differ_on_unguarded_decrement(self, capsys, tmp_path):
        src = tmp_path / "p.sct"
        src.write_text("f(x) = f(x-1)")
        code, guarded = run_json(capsys, ["extract", str(src)])
        assert code == 0
        code, syntactic = run_json(capsys, ["extract", str(src), "--mode", "syntactic"])
        assert guarded["graphs"][0]["arcs"][0]["kind"] == "nonstrict"
        assert syntactic["graphs"][0]["arcs"][0]["kind"] == "strict"


class TestRun:
    def test_value(self, capsys, ack_file):
        code, report = run_json(capsys, ["run", ack_file, "A", "2", "2"])
        assert code == 0 and report["value"] == 7

    def test_out_of_fuel(self, capsys, ack_file):
        code, report = run_json(capsys, ["run", ack_file, "A", "3", "3", "--fuel", "10"])
        assert code == 1 and report["out_of_fuel"] is True

    def test_wrong_arity(self, capsys, ack_file):
        assert main(["run", ack_file, "A", "2"]) == 2


class TestGraphsCheck:
    def test_ackermann_fixture(self, capsys, fixture_dir):
        capsys.readouterr()
        code, report = run_json(
            capsys, ["graphs", "check", str(fixture_dir / "ackermann-graphs.json")]
        )
        assert code == 0 and report["sct"] is True

    def test_swap_with_oracle(self, capsys, fixture_dir):
        capsys.readouterr()
        code, report = run_json(
            capsys,
            ["graphs", "check", str(fixture_dir / "swap-graphs.json"), "--oracle", "2"],
        )
        assert code == 1
        assert report["lasso"]["period"] == ["S", "S"]
        assert report["oracle"]["agrees"] is True
        assert report["oracle"]["counterexample"]["period"] == ["S"]

    def test_schema_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(
            '{"functions": [{"name": "f", "params": ["x"]}],'
            ' "graphs": [{"source": "f", "target": "f",'
            ' "arcs": [{"from": "nope", "kind": "strict", "to": "x"}]}]}'
        )
        assert main(["graphs", "check", str(bad)]) == 2
        assert "/graphs/0/arcs/0/from" in capsys.readouterr().err


class TestOracleCommand:
    def test_compare_agrees(self, capsys, fixture_dir):
        capsys.readouterr()
        code, report = run_json(
            capsys,
            [
                "oracle",
                str(fixture_dir / "ackermann-graphs.json"),
                "--max-word-len",
                "3",
                "--compare",
            ],
        )
        assert code == 0
        assert report["counterexample"] is None
        assert report["criterion_agrees"] is True


class TestPrinciples:
    def test_spp_family(self, capsys):
        code, data = run_json(capsys, ["principles", "spp-family", "--k", "2"])
        assert code == 0 and len(data["graphs"]) == 3

    def test_reversal(self, capsys):
        code, data = run_json(
            capsys, ["principles", "reversal", "--k", "2", "--period", "0,1"]
        )
        assert code == 0
        assert data["descent"]["param"] == "z01"

    def test_star(self, capsys):
        code, data = run_json(
            capsys,
            ["principles", "star", "--n", "20", "--k", "2", "--min-triangles", "5"],
        )
        assert code == 0
        assert (data["center"], data["color"]) == (0, 0)
        assert data["triangles"] >= 5


class TestFixtures:
    def test_files_written(self, fixture_dir):
        names = sorted(p.name for p in fixture_dir.iterdir())
        assert names == [
            "ackermann-graphs.json",
            "ackermann.sct",
            "spp-warmup.json",
            "swap-graphs.json",
        ]

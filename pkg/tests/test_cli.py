import json

import pytest

from urbasis.cli import main
from urbasis.intset import IntSet


def run(args):
    return main(args)


class TestConstructT1:
    def test_writes_expected_trace(self, tmp_path):
        out = tmp_path / "t1.json"
        assert run(["construct", "t1", "--stages", "2", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["theorem"] == "1"
        final = data["stages"][-1]
        assert final["elements"] == ["-25", "-5", "-1", "1", "6", "24"]
        assert final["audit"]["m"] == "1"
        assert final["audit"]["b_tilde"] == "25"
        assert data["manifest"]["command"] == "construct t1"

    def test_byte_identical_reruns(self, tmp_path):
        out = tmp_path / "a.json"
        run(["construct", "t1", "--stages", "5", "--out", str(out)])
        first = out.read_bytes()
        run(["construct", "t1", "--stages", "5", "--out", str(out)])
        assert out.read_bytes() == first

    def test_stdout_when_no_out(self, capsys):
        assert run(["construct", "t1", "--stages", "1"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["stages"][0]["elements"] == ["-1", "1"]

    def test_missing_stages_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["construct", "t1"])
        assert exc.value.code == 2


class TestConstructT2:
    def test_round_one_artifact(self, tmp_path):
        out = tmp_path / "t2.json"
        assert run(
            ["construct", "t2", "--rounds", "1", "--epsilon", "1/10", "--out", str(out)]
        ) == 0
        data = json.loads(out.read_text())
        assert data["theorem"] == "2"
        assert data["epsilon"] == "1/10"
        assert len(data["x_ladder"]) == 2
        odd = data["stages"][-1]
        assert odd["densify"]["pruned_pairs"] == 15

    def test_infeasible_round_maps_to_exit_3(self, tmp_path, capsys):
        code = run(
            [
                "construct", "t2", "--rounds", "2", "--epsilon", "1/10",
                "--out", str(tmp_path / "x.json"),
            ]
        )
        assert code == 3
        assert "Sidon prime" in capsys.readouterr().err

    def test_bad_epsilon_is_usage_error(self):
        assert run(["construct", "t2", "--rounds", "1", "--epsilon", "nope"]) == 2
        assert run(["construct", "t2", "--rounds", "1", "--epsilon", "2/1"]) == 2


class TestSidonCommand:
    def test_bose(self, capsys):
        assert run(["sidon", "--method", "bose", "--param", "101"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["cardinality"] == 101
        assert len(data["elements"]) == 101

    def test_greedy(self, capsys):
        assert run(["sidon", "--method", "greedy", "--param", "5"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["elements"] == ["1", "2", "4", "8", "13"]

    def test_composite_param_is_usage_error(self, capsys):
        assert run(["sidon", "--method", "bose", "--param", "100"]) == 2


class TestVerifyCommand:
    def test_round_trip_construct_verify(self, tmp_path):
        out = tmp_path / "t1.json"
        run(["construct", "t1", "--stages", "6", "--out", str(out)])
        assert run(["verify", "--input", str(out), "--unique-up-to", "5"]) == 0

    def test_collision_fails_with_exit_1(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(IntSet([0, 1, 2]).to_json())
        code = run(["verify", "--input", str(bad), "--unique-up-to", "2"])
        assert code == 1
        data = json.loads(capsys.readouterr().out)
        assert data["checks"]["unique"]["counterexample"] == "2"

    def test_sidon_mode(self, tmp_path):
        good = tmp_path / "s.txt"
        good.write_text("1\n2\n4\n8\n13\n")
        assert run(["verify", "--input", str(good), "--sidon"]) == 0
        bad = tmp_path / "b.txt"
        bad.write_text("1\n2\n3\n")
        assert run(["verify", "--input", str(bad), "--sidon"]) == 1

    def test_line_format_with_comments(self, tmp_path):
        f = tmp_path / "set.txt"
        f.write_text("# a unique basis prefix\n-1\n1\n")
        assert run(["verify", "--input", str(f), "--unique-up-to", "0"]) == 0

    def test_missing_file_is_input_error(self, tmp_path):
        assert run(["verify", "--input", str(tmp_path / "nope.json")]) == 2


class TestAnalyzeCommands:
    @pytest.fixture()
    def artifact(self, tmp_path):
        out = tmp_path / "t1.json"
        run(["construct", "t1", "--stages", "8", "--out", str(out)])
        return out

    def test_blocks(self, artifact, capsys):
        assert run(["analyze", "blocks", "--input", str(artifact), "--n", "10"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["checks"]) == 5
        assert all(c["ok"] for c in data["checks"])
        assert data["probe_ok"] is True

    def test_growth_with_csv(self, artifact, tmp_path, capsys):
        csv_path = tmp_path / "g.csv"
        code = run(
            [
                "analyze", "growth", "--input", str(artifact),
                "--grid", "log:1:100000:30", "--csv", str(csv_path),
            ]
        )
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["nathanson_ok"] is True
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "x,count,per_cbrt,per_sqrt,slack"
        assert len(lines) == len(data["samples"]) + 1

    def test_bad_grid_is_usage_error(self, artifact):
        assert run(
            ["analyze", "growth", "--input", str(artifact), "--grid", "lin:1:10:5"]
        ) == 2

import json

import pytest

import cli
from bench import BENCH_COLUMNS, EXIT_OK, EXIT_PARSE, EXIT_TIMEOUT, EXIT_VALIDATION


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def k22_args(graph_files):
    edges, weights = graph_files
    return ["--input", str(edges), "--weights", str(weights), "--alpha", "2", "--beta", "2"]


class TestRun:
    @pytest.mark.parametrize("algo", ["basic", "slimtree", "upperbound", "newfra", "pruning", "oracle"])
    def test_k22(self, graph_files, capsys, algo):
        assert cli.main(["run", *k22_args(graph_files), "--algo", algo, "--top", "1"]) == EXIT_OK
        out = records(capsys.readouterr().out)
        assert out[0] == {
            "record": "community",
            "rank": 1,
            "influence": "5",
            "influence_decimal": 5.0,
            "upper_ids": [1, 2],
            "lower_ids": [1, 2],
        }
        assert out[-1]["record"] == "stats"
        assert out[-1]["timed_out"] is False

    def test_output_is_byte_identical(self, graph_files, capsys):
        argv = ["run", *k22_args(graph_files), "--algo", "slimtree"]
        cli.main(argv)
        first = capsys.readouterr().out
        cli.main(argv)
        assert capsys.readouterr().out == first

    def test_csv(self, graph_files, capsys):
        assert cli.main(["run", *k22_args(graph_files), "--format", "csv"]) == EXIT_OK
        lines = capsys.readouterr().out.split("\n")
        assert lines[:3] == ["rank,influence,influence_decimal,upper_ids,lower_ids", "1,5,5.0,1 2,1 2", ""]
        assert lines[3].split(",") == [
            "record", "algo", "n_u", "n_v", "m", "nodes", "core_computations", "bound_evaluations",
            "cuts_ub1", "cuts_ub2", "cuts_ub3", "slim_skips", "vertices_expanded", "early_breaks", "timed_out",
        ]
        assert lines[4].startswith("stats,upperbound,2,2,4,1,")
        assert lines[4].endswith(",False")
        assert lines[5:] == [""]

    def test_output_file(self, graph_files, tmp_path, capsys):
        target = tmp_path / "out.jsonl"
        assert cli.main(["run", *k22_args(graph_files), "--output", str(target)]) == EXIT_OK
        assert capsys.readouterr().out == ""
        assert records(target.read_text(encoding="utf-8"))[0]["influence"] == "5"

    def test_regenerated_weights(self, graph_files, capsys):
        edges, _ = graph_files
        argv = ["run", "--input", str(edges), "--gen-weights-seed", "3", "--alpha", "1", "--beta", "1"]
        assert cli.main(argv) == EXIT_OK
        first = capsys.readouterr().out
        cli.main(argv)
        assert capsys.readouterr().out == first

    def test_timeout(self, graph_files, capsys):
        argv = ["run", *k22_args(graph_files), "--algo", "basic", "--time-limit", "0.000000001"]
        assert cli.main(argv) == EXIT_TIMEOUT
        assert records(capsys.readouterr().out)[-1]["timed_out"] is True


class TestErrors:
    def test_parse_error(self, tmp_path, capsys):
        edges = tmp_path / "bad.edges"
        edges.write_text("1 x\n", encoding="utf-8")
        assert cli.main(["run", "--input", str(edges)]) == EXIT_PARSE
        assert "line 1" in capsys.readouterr().err

    def test_negative_weight(self, graph_files, tmp_path, capsys):
        edges, _ = graph_files
        weights = tmp_path / "bad.weights"
        weights.write_text("U 1 -2\n", encoding="utf-8")
        assert cli.main(["run", "--input", str(edges), "--weights", str(weights)]) == EXIT_VALIDATION
        assert capsys.readouterr().out == ""

    def test_unknown_algorithm(self, graph_files):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["run", *k22_args(graph_files), "--algo", "dfs"])
        assert excinfo.value.code == 2

    def test_unknown_bound(self, graph_files):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["run", *k22_args(graph_files), "--bounds", "ub1,ub9"])
        assert excinfo.value.code == 2

    def test_non_positive_alpha(self, graph_files):
        edges, _ = graph_files
        assert cli.main(["run", "--input", str(edges), "--alpha", "0"]) == EXIT_VALIDATION

    def test_missing_input(self):
        assert cli.main(["run"]) == EXIT_VALIDATION

    def test_oracle_refuses_large_graphs(self, tmp_path):
        edges = tmp_path / "big.edges"
        edges.write_text("".join(f"{u} {v}\n" for u in range(1, 13) for v in range(1, 12)), encoding="utf-8")
        assert cli.main(["run", "--input", str(edges), "--algo", "oracle"]) == EXIT_VALIDATION


class TestGen:
    def test_round_trip(self, tmp_path, capsys):
        target = tmp_path / "g.edges"
        argv = ["gen", "--nu", "6", "--nv", "5", "--m", "14", "--seed", "7", "--output", str(target)]
        assert cli.main(argv) == EXIT_OK
        weights = tmp_path / "g.edges.weights"
        lines = [line for line in target.read_text(encoding="utf-8").splitlines() if not line.startswith("%")]
        assert len(lines) == 14
        assert len(weights.read_text(encoding="utf-8").splitlines()) == 11

        first = (target.read_bytes(), weights.read_bytes())
        assert cli.main(argv) == EXIT_OK
        assert (target.read_bytes(), weights.read_bytes()) == first

        capsys.readouterr()
        argv = ["run", "--input", str(target), "--weights", str(weights), "--alpha", "1", "--beta", "1"]
        assert cli.main(argv) == EXIT_OK
        assert records(capsys.readouterr().out)[-1]["m"] == 14

    def test_needs_output(self):
        assert cli.main(["gen", "--nu", "2", "--nv", "2", "--m", "1"]) == EXIT_VALIDATION


class TestBench:
    def test_csv_rows(self, graph_files, capsys):
        argv = [
            "bench", *k22_args(graph_files), "--algo", "slimtree",
            "--vary", "alpha", "--values", "1,2,3", "--reps", "2", "--format", "csv",
        ]
        assert cli.main(argv) == EXIT_OK
        captured = capsys.readouterr()
        lines = captured.out.splitlines()
        assert lines[0] == ",".join(BENCH_COLUMNS)
        assert len(lines) == 1 + 3 * 2
        assert [line.split(",")[1] for line in lines[1:]] == ["1", "1", "2", "2", "3", "3"]
        assert [line.split(",")[4] for line in lines[1:3]] == ["0", "1"]
        assert "[100%]" in captured.err

    def test_sample_fraction(self, graph_files, capsys):
        argv = [
            "bench", *k22_args(graph_files), "--algo", "newfra",
            "--vary", "sample-fraction", "--values", "0.5,1", "--format", "json",
        ]
        assert cli.main(argv) == EXIT_OK
        rows = records(capsys.readouterr().out)
        assert [row["n_u"] + row["n_v"] for row in rows] == [2, 4]
        assert rows[1]["influences"] == "5"

    def test_bad_values_write_nothing(self, graph_files, capsys):
        argv = ["bench", *k22_args(graph_files), "--vary", "sample-fraction", "--values", "0,0.5"]
        assert cli.main(argv) == EXIT_VALIDATION
        assert capsys.readouterr().out == ""

    def test_oracle_is_not_benchmarked(self, graph_files, capsys):
        argv = ["bench", *k22_args(graph_files), "--algo", "oracle", "--vary", "r", "--values", "1"]
        assert cli.main(argv) == EXIT_VALIDATION
        assert capsys.readouterr().out == ""


class TestOracleCommand:
    def test_report(self, graph_files, capsys):
        assert cli.main(["oracle", *k22_args(graph_files), "--top", "1"]) == EXIT_OK
        out = records(capsys.readouterr().out)
        assert out[0]["record"] == "metadata"
        assert out[0]["count"] == 1
        assert [r["record"] for r in out[1:]] == ["community"]

    def test_with_algorithm(self, graph_files, capsys):
        assert cli.main(["oracle", *k22_args(graph_files), "--algo", "newfra", "--top", "2"]) == EXIT_OK
        out = records(capsys.readouterr().out)
        ratios = [r for r in out if r["record"] == "ratio"]
        assert ratios == [
            {
                "record": "ratio",
                "algo": "newfra",
                "rank": 1,
                "approx": "5",
                "exact": "5",
                "ratio": "1",
                "ratio_decimal": 1.0,
            }
        ]
        assert out[-1] == {"record": "coverage", "algo": "newfra", "coverage": "1"}

import csv
import io

import numpy as np
import pytest
from click.testing import CliRunner

from app.main import cli, main
from app.services.benchmarks.functions import get_benchmark
from app.services.interpolation.nodes import NodeFamily, make_nodes


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.fixture
def runner():
    return CliRunner()


def test_interpolate_at_endpoint(runner):
    result = runner.invoke(cli, ["interpolate", "--method", "swi1", "--function", "1", "--n", "12", "--at", "-1", "--at", "0"])
    assert result.exit_code == 0, result.output
    rows = _rows(result.stdout)
    assert [float(r["x"]) for r in rows] == [-1.0, 0.0]
    assert float(rows[0]["value"]) == pytest.approx(1 / 26, abs=1e-10)
    assert float(rows[1]["value"]) == pytest.approx(1.0, abs=0.1)


def test_interpolate_dense_grid(runner):
    result = runner.invoke(cli, ["interpolate", "--method", "ci2", "--function", "2", "--n", "30", "--grid", "--grid-points", "101"])
    assert result.exit_code == 0, result.output
    rows = _rows(result.stdout)
    assert len(rows) == 101
    assert float(rows[0]["x"]) == -1.0 and float(rows[-1]["x"]) == 1.0


@pytest.mark.parametrize("method", ["classical", "bary", "ci1", "ci2", "swi1", "swi2"])
def test_interpolate_every_method(runner, method):
    result = runner.invoke(cli, ["interpolate", "--method", method, "--function", "5", "--n", "8", "--at", "0.3"])
    assert result.exit_code == 0, result.output
    assert len(_rows(result.stdout)) == 1


def test_data_file_matches_benchmark_mode(runner, tmp_path):
    f = get_benchmark(1)
    unit = make_nodes(NodeFamily.EQUIDISTANT, 12).nodes
    path = tmp_path / "runge.csv"
    path.write_text("# f_1 sampled on [0, 2]\n" + "".join(f"{float(x) + 1.0!r},{float(y)!r}\n" for x, y in zip(unit, f(unit))))

    from_data = runner.invoke(cli, ["interpolate", "--method", "swi1", "--data", str(path), "--at", "0", "--at", "0.7", "--at", "2"])
    from_benchmark = runner.invoke(cli, ["interpolate", "--method", "swi1", "--function", "1", "--n", "12", "--at", "-1", "--at", "-0.3", "--at", "1"])
    assert from_data.exit_code == 0, from_data.output
    got = [float(r["value"]) for r in _rows(from_data.stdout)]
    expected = [float(r["value"]) for r in _rows(from_benchmark.stdout)]
    assert got == pytest.approx(expected, abs=1e-12)


def test_non_equidistant_data_exits_with_usage_code(tmp_path, capsys):
    path = tmp_path / "uneven.txt"
    path.write_text("0 1\n0.1 2\n0.5 3\n1 4\n")
    assert main(["interpolate", "--method", "swi2", "--data", str(path), "--at", "0.5"]) == 1
    assert "not equidistant" in capsys.readouterr().err


def test_interpolate_needs_a_source():
    assert main(["interpolate", "--method", "swi1", "--at", "0"]) == 1
    assert main(["interpolate", "--method", "swi1", "--function", "1", "--n", "4"]) == 1


def test_sweep_output(runner):
    result = runner.invoke(cli, ["sweep", "--function", "1", "--n", "10..12", "--grid-points", "201"])
    assert result.exit_code == 0, result.output
    rows = _rows(result.stdout)
    assert len(rows) == 12
    assert [r["method"] for r in rows[::3]] == ["CI1", "CI2", "SWI1", "SWI2"]
    assert rows[0]["endpoint_part"] == ""


def test_sweep_writes_file(runner, tmp_path):
    out = tmp_path / "sweep.csv"
    args = ["sweep", "--function", "2", "--method", "swi1", "--method", "avg-ci", "--n-range", "4..10:3", "--grid-points", "201", "--out", str(out)]
    assert runner.invoke(cli, args).exit_code == 0
    first = out.read_bytes()
    assert runner.invoke(cli, args).exit_code == 0
    assert out.read_bytes() == first
    assert [r["n"] for r in _rows(first.decode())] == ["4", "7", "10", "4", "7", "10"]


def test_partition_output(runner):
    result = runner.invoke(cli, ["partition", "--function", "9", "--n", "30..30", "--grid-points", "401"])
    assert result.exit_code == 0, result.output
    for row in _rows(result.stdout):
        assert float(row["central_part"]) > float(row["endpoint_part"])


@pytest.mark.parametrize(
    "args",
    [
        ["sweep", "--n-range", "40..10"],
        ["sweep", "--n-range", "ten"],
        ["sweep", "--grid-points", "200"],
        ["sweep", "--function", "11"],
        ["sweep", "--bogus"],
        ["min-degree", "--epsilon", "-0.1"],
        ["robustness", "--digits", "0"],
    ],
)
def test_usage_errors_exit_with_1(args):
    assert main(args) == 1


def test_not_reached_exits_with_2(capsys):
    code = main(["min-degree", "--function", "4", "--family", "CI", "--epsilon", "0.001", "--n-max", "5", "--grid-points", "201"])
    assert code == 2
    assert "best error" in capsys.readouterr().err


def test_min_degree_output(runner):
    result = runner.invoke(cli, ["min-degree", "--function", "1", "--family", "SWI", "--metric", "max", "--epsilon", "0.1", "--n-max", "40"])
    assert result.exit_code == 0, result.output
    (row,) = _rows(result.stdout)
    assert row["family"] == "SWI" and row["metric"] == "max"
    assert abs(int(row["degree"]) - 8) <= 2


def test_table2_with_reference(runner):
    result = runner.invoke(cli, ["table2", "--function", "1", "--epsilon", "0.1", "--reference", "--grid-points", "2001"])
    assert result.exit_code == 0, result.output
    (row,) = _rows(result.stdout)
    assert row["max_0.1_CI_ref"] == "12" and row["max_0.1_SWI_ref"] == "8"
    assert abs(int(row["max_0.1_SWI"]) - 8) <= 2
    assert abs(int(row["cumulative_0.1_CI"]) - 9) <= 2


def test_table2_not_reached_sentinel(runner):
    result = runner.invoke(cli, ["table2", "--function", "4", "--epsilon", "0.001", "--n-max", "4", "--grid-points", "201"])
    assert result.exit_code == 0, result.output
    (row,) = _rows(result.stdout)
    assert row["max_0.001_CI"] == "NR"


def test_robustness_output(runner):
    result = runner.invoke(cli, ["robustness", "--function", "1", "--n", "12", "--digits", "2", "--grid-points", "2001"])
    assert result.exit_code == 0, result.output
    rows = _rows(result.stdout)
    assert [r["kind"] for r in rows] == ["1", "2"]
    for r in rows:
        bound = float(r["max_data_perturbation"]) * float(r["lebesgue_constant"])
        assert float(r["max_deviation"]) <= bound * (1 + 1e-9)


def test_transform_output(runner):
    result = runner.invoke(cli, ["transform", "--function", "1", "--n", "8", "--grid-points", "21"])
    assert result.exit_code == 0, result.output
    rows = _rows(result.stdout)
    assert len(rows) == 21
    assert rows[0]["g1"] == "" and rows[10]["g1"] != ""


def test_grid_points_from_environment(runner, monkeypatch):
    from app.core.config import settings

    monkeypatch.setattr(settings, "SWI_GRID_POINTS", 41)
    result = runner.invoke(cli, ["interpolate", "--method", "swi2", "--function", "1", "--n", "6", "--grid"])
    assert len(_rows(result.stdout)) == 41


@pytest.mark.parametrize("command", ["interpolate", "sweep", "min-degree", "table2", "robustness", "partition", "transform"])
def test_help_lists_flags(runner, command):
    result = runner.invoke(cli, [command, "--help"])
    assert result.exit_code == 0
    assert "--grid-points" in result.output
    assert main([command, "--help"]) == 0

"""Command line behaviour, exercised in process through cli.main."""

import json

import pytest

from conftest import LINEAR_TABLE, QUADRATIC_TABLE, table_csv
from tpsched import cli

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_scenario(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------------------
# solve


def test_solve_text_worked_example(capsys, tmp_path):
    scenario = write_scenario(
        tmp_path,
        "works.json",
        {
            "family": "quadratic",
            "p": 100.0,
            "q": 1000.0,
            "c_real": 0.4,
            "vc_a": 20.0,
            "currency_label": "$",
        },
    )
    code, out, err = run(capsys, "solve", "--scenario", scenario)
    assert code == 0
    assert err == ""
    assert "family:            quadratic" in out
    assert "p (value at q):    $100.00" in out
    assert "c_effective:       0.250" in out
    assert "x (covered):       0.903" in out
    assert "t (price):         $42.15" in out
    assert "n adjusted:        0.011" in out


def test_solve_text_without_variable_cost_hides_adjustment(capsys):
    code, out, err = run(
        capsys, "solve", "--family", "linear", "--c-real", "0.18"
    )
    assert code == 0
    assert "c_effective" not in out
    assert "n adjusted" not in out
    assert "x (covered):       0.900" in out
    assert "t (price):         0.20" in out


def test_solve_csv(capsys):
    code, out, err = run(
        capsys,
        "solve",
        "--family", "linear", "--p", "100", "--q", "1000",
        "--c-real", "0.32",
        "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "c_real,c_effective,x,f,t,n,n_adjusted"
    assert lines[1] == "0.320,0.320,0.800,800.00,40.00,0.040,0.040"


def test_solve_json_round_trips_as_scenario(capsys, tmp_path):
    first_out = str(tmp_path / "first.json")
    code, _, _ = run(
        capsys,
        "solve",
        "--family", "quadratic", "--p", "100", "--q", "1000",
        "--c-real", "0.4", "--vc-a", "20",
        "--format", "json",
        "--out", first_out,
    )
    assert code == 0
    first = json.loads(open(first_out, encoding="utf-8").read())
    assert first["family"] == "quadratic"
    assert first["result"]["c_effective"] == 0.25
    # the emitted object doubles as a scenario file
    code, out, _ = run(capsys, "solve", "--scenario", first_out, "--format", "json")
    assert code == 0
    second = json.loads(out)
    for key in ("p", "q", "x", "t", "n", "n_adjusted", "c_effective"):
        assert abs(second["result"][key] - first["result"][key]) < 1e-12


def test_solve_out_file_matches_stdout(capsys, tmp_path):
    argv = ("solve", "--family", "exponential", "--c-real", "0.3", "--format", "csv")
    _, streamed, _ = run(capsys, *argv)
    out_path = tmp_path / "report.csv"
    code, silent, _ = run(capsys, *argv, "--out", str(out_path))
    assert code == 0
    assert silent == ""
    assert out_path.read_text(encoding="utf-8") == streamed


def test_solve_flag_overrides_scenario(capsys, tmp_path):
    scenario = write_scenario(
        tmp_path, "base.json", {"family": "linear", "c_real": 0.5}
    )
    code, out, _ = run(
        capsys, "solve", "--scenario", scenario, "--c-real", "0.18"
    )
    assert code == 0
    assert "c_real:            0.180" in out


# ---------------------------------------------------------------------------
# table


@pytest.mark.parametrize(
    "which, golden", [(1, LINEAR_TABLE), (3, QUADRATIC_TABLE)]
)
def test_paper_table_bytes(capsys, which, golden):
    code, out, err = run(
        capsys, "table", "--paper-table", str(which), "--format", "csv"
    )
    assert code == 0
    assert err == ""
    assert out == table_csv(golden)


def test_paper_table_is_deterministic(capsys):
    _, first, _ = run(capsys, "table", "--paper-table", "4", "--format", "csv")
    _, second, _ = run(capsys, "table", "--paper-table", "4", "--format", "csv")
    assert first == second


def test_table_grid_range(capsys):
    code, out, _ = run(
        capsys,
        "table",
        "--family", "linear",
        "--grid", "0:0.5:0.05",
        "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "c,x,n"
    assert len(lines) == 12  # header + 11 inclusive grid rows
    assert lines[1].startswith("0.500,")
    assert lines[-1].startswith("0.000,")


def test_table_grid_list_with_infeasible_rate(capsys):
    code, out, _ = run(
        capsys,
        "table",
        "--family", "linear",
        "--grid", "0.6,0.3",
        "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "0.600,infeasible,infeasible"
    assert lines[2].startswith("0.300,")


def test_table_money_scale_switches_to_extended_columns(capsys):
    code, out, _ = run(
        capsys,
        "table",
        "--family", "quadratic", "--p", "100", "--q", "1000",
        "--vc-a", "20",
        "--grid", "0.4,0.3",
        "--format", "csv",
        "--round", "2",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "c,x,t,f,n,n_adjusted"
    assert lines[1] == "0.40,0.90,42.15,903.01,0.01,0.01"


def test_table_scenario_sweep_object(capsys, tmp_path):
    scenario = write_scenario(
        tmp_path,
        "sweep.json",
        {"family": "linear", "sweep": {"start": 0.5, "stop": 0.1, "step": 0.2}},
    )
    code, out, _ = run(capsys, "table", "--scenario", scenario, "--format", "csv")
    assert code == 0
    rows = [line.split(",")[0] for line in out.splitlines()[1:]]
    assert rows == ["0.500", "0.300", "0.100"]


def test_table_without_grid_is_an_error(capsys):
    code, out, err = run(capsys, "table", "--family", "linear")
    assert code == 2
    assert err.startswith("error[bad-scenario]:")


def test_table_round_bounds(capsys):
    code, _, err = run(
        capsys, "table", "--family", "linear", "--grid", "0.1", "--round", "11"
    )
    assert code == 2
    assert err.startswith("error[bad-scenario]:")


def test_table_plot_writes_png(capsys, tmp_path):
    target = tmp_path / "sweep.png"
    code, _, _ = run(
        capsys,
        "table",
        "--paper-table", "1",
        "--format", "csv",
        "--plot", str(target),
    )
    assert code == 0
    assert target.read_bytes()[:8] == PNG_MAGIC


# ---------------------------------------------------------------------------
# curve


def test_curve_csv_small_sample(capsys):
    code, out, _ = run(
        capsys,
        "curve",
        "--family", "linear", "--c-real", "0.18",
        "--samples", "4",
        "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "f,nar,nmr,hyperbola,is_solution"
    assert len(lines) == 6  # 4 samples plus the schedule row
    last_sample = lines[4].split(",")
    assert last_sample[0] == "1.0"
    assert float(last_sample[1]) == 1.0  # nar(q) = p on the unit curve
    assert abs(float(last_sample[2])) < 1e-12  # nmr vanishes at q
    solution = lines[5].split(",")
    assert solution[4] == "1"
    assert abs(float(solution[0]) - 0.9) < 1e-9
    # at the settled point the price hyperbola meets the NMR curve
    assert abs(float(solution[2]) - float(solution[3])) < 1e-9


def test_curve_json_solution_block(capsys):
    code, out, _ = run(
        capsys,
        "curve",
        "--family", "quadratic", "--c-real", "0.25",
        "--samples", "8",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["family"] == "quadratic"
    assert len(payload["samples"]) == 8
    assert abs(payload["solution"]["x"] - 0.903) < 5e-4


def test_curve_sample_floor(capsys):
    code, _, err = run(
        capsys, "curve", "--family", "linear", "--samples", "1"
    )
    assert code == 2
    assert err.startswith("error[bad-scenario]:")


def test_curve_plot_writes_png(capsys, tmp_path):
    target = tmp_path / "curve.png"
    code, _, _ = run(
        capsys,
        "curve",
        "--family", "exponential", "--c-real", "0.3",
        "--format", "csv",
        "--plot", str(target),
    )
    assert code == 0
    assert target.read_bytes()[:8] == PNG_MAGIC


# ---------------------------------------------------------------------------
# validate


def test_validate_clean_scenario(capsys):
    code, out, err = run(
        capsys, "validate", "--family", "linear", "--c-real", "0.3"
    )
    assert code == 0
    assert err == ""
    assert out.startswith("ok: linear curve calibrates")
    assert "ok: c_effective = 0.3 is feasible" in out


def test_validate_warns_on_bumpy_points(capsys, tmp_path):
    scenario = write_scenario(
        tmp_path,
        "bumpy.json",
        {
            "family": "points",
            "points": [[0.2, 1.00], [0.5, 1.06], [0.8, 0.85], [1.1, 0.45]],
        },
    )
    code, out, err = run(capsys, "validate", "--scenario", scenario)
    assert code == 1
    assert "warning[not-decreasing]:" in out


def test_validate_rejects_infeasible_rate(capsys):
    code, out, err = run(
        capsys, "validate", "--family", "linear", "--c-real", "0.6"
    )
    assert code == 2
    assert err.startswith("error[infeasible-contribution]:")


def test_missing_family_is_an_error(capsys):
    code, _, err = run(capsys, "solve", "--c-real", "0.2")
    assert code == 2
    assert err.startswith("error[bad-scenario]:")


def test_conflicting_parameterisations_rejected(capsys, tmp_path):
    scenario = write_scenario(
        tmp_path,
        "clash.json",
        {"family": "linear", "a": 2.0, "b": 1.0, "p": 1.0, "q": 1.0},
    )
    code, _, err = run(capsys, "solve", "--scenario", scenario)
    assert code == 2
    assert err.startswith("error[bad-scenario]:")


def test_infeasible_solve_reports_error_line(capsys):
    code, out, err = run(
        capsys, "solve", "--family", "exponential", "--c-real", "0.44"
    )
    assert code == 2
    assert out == ""
    assert err.startswith("error[infeasible-contribution]:")

"""Command-line front end: formats, exit codes, determinism."""

import json

import pytest

from thermomajor.cli import main
from thermomajor.states import state_to_json, make_state


@pytest.fixture
def state_files(tmp_path):
    paths = {}
    for name, state in {
        "mixed": make_state(("1/3", "2/3"), (1, 1)),
        "pure": make_state((1, 0), (1, 1)),
        "biased": make_state(("3/4", "1/4"), (1, 1)),
        "tilted_init": make_state(("1/2", "1/2"), (2, 1)),
        "tilted_fin": make_state(("1/3", "2/3"), (2, 1)),
    }.items():
        path = tmp_path / f"{name}.json"
        path.write_text(state_to_json(state))
        paths[name] = str(path)
    return paths


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out


class TestCurve:
    def test_csv_breakpoints(self, capsys, state_files):
        code, out = run(capsys, ["curve", state_files["mixed"]])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,y,x_decimal,y_decimal"
        assert lines[1].startswith("0,0,")
        assert lines[2].startswith("1,2/3,")
        assert lines[3].startswith("2,1,")

    def test_gibbs_curve_is_two_points(self, capsys, tmp_path):
        path = tmp_path / "gibbs.json"
        path.write_text(state_to_json(make_state(("1/2", "1/2"), (1, 1))))
        code, out = run(capsys, ["curve", str(path)])
        assert code == 0
        assert len(out.strip().splitlines()) == 3  # header + 2 points

    def test_svg_output(self, capsys, state_files):
        code, out = run(capsys, ["curve", state_files["mixed"], "--format", "svg"])
        assert code == 0
        assert out.startswith("<svg")
        assert 'width="800" height="500"' in out
        assert "<polyline" in out

    def test_malformed_rational_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"probs": ["1/0", "1"], "weights": [1, 1]}')
        code, _ = run(capsys, ["curve", str(path)])
        assert code == 2

    def test_missing_file_exits_2(self, capsys):
        code, _ = run(capsys, ["curve", "nope.json"])
        assert code == 2


class TestMajorize:
    def test_true_direction(self, capsys, state_files):
        code, out = run(capsys, ["majorize", state_files["pure"], state_files["mixed"]])
        assert code == 0
        assert json.loads(out) == {"majorizes": True}

    def test_false_direction(self, capsys, state_files):
        code, out = run(capsys, ["majorize", state_files["mixed"], state_files["pure"]])
        assert code == 1
        assert json.loads(out) == {"majorizes": False}


class TestDivergence:
    def test_profile_round_trips(self, capsys, state_files):
        code, out = run(capsys, ["divergence", state_files["biased"]])
        assert code == 0
        payload = json.loads(out)
        assert payload["alpha"][-1] == "inf"
        assert len(payload["alpha"]) == len(payload["value"])

    def test_alpha_grid_flag(self, capsys, state_files):
        code, out = run(
            capsys,
            ["divergence", state_files["biased"], "--alpha-grid", "0,1,inf"],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["alpha"] == [0.0, 1.0, "inf"]

    def test_env_grid_override(self, capsys, state_files, monkeypatch):
        monkeypatch.setenv("THERMO_ALPHA_GRID", "0.5,2")
        code, out = run(capsys, ["divergence", state_files["biased"]])
        assert code == 0
        assert json.loads(out)["alpha"] == [0.5, 2.0]


class TestBuildVerify:
    def test_minimal_build_then_verify(self, capsys, state_files, tmp_path):
        res_path = tmp_path / "res.json"
        code, out = run(
            capsys,
            ["build-reservoir", "--method", "minimal", state_files["biased"], "-o", str(res_path)],
        )
        assert code == 0
        payload = json.loads(res_path.read_text())
        assert payload["r"] == ["3/4", "1/4"]
        gibbs_path = tmp_path / "gibbs.json"
        gibbs_path.write_text(state_to_json(make_state(("1/2", "1/2"), (1, 1))))
        code, out = run(
            capsys,
            ["verify", state_files["biased"], str(gibbs_path), str(res_path)],
        )
        assert code == 0
        assert json.loads(out)["efficient"] is True

    def test_general_build(self, capsys, state_files):
        code, out = run(
            capsys,
            [
                "build-reservoir",
                "--method",
                "general",
                state_files["tilted_init"],
                state_files["tilted_fin"],
            ],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["r"] == ["1/3", "1/6", "1/2"]
        assert payload["init_weights"] == ["1", "1/8", "3/8"]

    def test_product_build(self, capsys, state_files):
        code, out = run(
            capsys,
            [
                "build-reservoir",
                "--method",
                "product",
                state_files["mixed"],
                state_files["pure"],
            ],
        )
        assert code == 2  # pure state has a zero probability

    def test_inefficient_reservoir_exits_1(self, capsys, state_files, tmp_path):
        res_path = tmp_path / "res.json"
        res_path.write_text(
            json.dumps({"r": ["1"], "init_weights": ["1"], "fin_weights": ["2"]})
        )
        gibbs_path = tmp_path / "gibbs.json"
        gibbs_path.write_text(state_to_json(make_state(("1/2", "1/2"), (1, 1))))
        code, out = run(
            capsys,
            ["verify", state_files["biased"], str(gibbs_path), str(res_path)],
        )
        assert code == 1
        assert json.loads(out)["efficient"] is False


class TestCatalyticCheck:
    def test_feasible_direction(self, capsys, state_files, tmp_path):
        gibbs_path = tmp_path / "gibbs.json"
        gibbs_path.write_text(state_to_json(make_state(("1/2", "1/2"), (1, 1))))
        code, out = run(
            capsys, ["catalytic-check", state_files["mixed"], str(gibbs_path)]
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["feasible"] is True
        assert payload["grid_only"] is True

    def test_infeasible_direction(self, capsys, state_files, tmp_path):
        gibbs_path = tmp_path / "gibbs.json"
        gibbs_path.write_text(state_to_json(make_state(("1/2", "1/2"), (1, 1))))
        code, out = run(
            capsys, ["catalytic-check", str(gibbs_path), state_files["mixed"]]
        )
        assert code == 1
        assert json.loads(out)["feasible"] is False


class TestOracleCheck:
    def test_small_run_agrees(self, capsys):
        code, out = run(capsys, ["oracle-check", "--trials", "30", "--seed", "7"])
        assert code == 0
        payload = json.loads(out)
        assert payload["agreements"] == 30
        assert payload["disagreements"] == []


class TestEngine:
    def test_report_and_stage_curves(self, capsys, tmp_path):
        curves_dir = tmp_path / "curves"
        code, out = run(
            capsys,
            [
                "engine",
                "--epsilon",
                "1",
                "--t-hot",
                "2",
                "--t-cold",
                "1",
                "--curves-dir",
                str(curves_dir),
            ],
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["eta"] == 0.5
        assert payload["hot_step_certified"] is True
        assert len(payload["reservoir_levels"]) == 4
        files = sorted(p.name for p in curves_dir.iterdir())
        assert files == [
            "stage1_cold_equilibrium.csv",
            "stage2_cold_populations_hot_bath.csv",
            "stage3_hot_equilibrium.csv",
            "stage4_hot_populations_cold_bath.csv",
        ]


class TestReproduce:
    @pytest.mark.parametrize("target", ["table1", "example1", "example2", "engine"])
    def test_targets_pass(self, capsys, target):
        code, out = run(capsys, ["reproduce", target])
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert all(check["ok"] for check in payload["checks"])


class TestDeterminism:
    def test_byte_identical_runs(self, capsys, state_files):
        _, first = run(capsys, ["divergence", state_files["biased"]])
        _, second = run(capsys, ["divergence", state_files["biased"]])
        assert first == second
        _, first = run(capsys, ["oracle-check", "--trials", "12", "--seed", "3"])
        _, second = run(capsys, ["oracle-check", "--trials", "12", "--seed", "3"])
        assert first == second

    def test_emitted_state_json_reparses_exactly(self, capsys, state_files, tmp_path):
        res_path = tmp_path / "res.json"
        run(
            capsys,
            ["build-reservoir", "--method", "minimal", state_files["biased"], "-o", str(res_path)],
        )
        from thermomajor.cli import _load_reservoir
        from thermomajor.reservoirs import minimal_extraction_reservoir

        rebuilt = _load_reservoir(str(res_path))
        direct = minimal_extraction_reservoir(make_state(("3/4", "1/4"), (1, 1)))
        assert rebuilt == direct

import json
import math
import subprocess
import sys

from helpers import SCENARIO_DIR

TURION = str(SCENARIO_DIR / "turion6.json")
STEP_DEMO = str(SCENARIO_DIR / "step_demo.json")


def run_cli(*args, **kw):
    return subprocess.run(
        [sys.executable, "-m", "dvfsim", *args], capture_output=True, text=True, timeout=120, **kw
    )


def table_rows(stdout):
    rows = {}
    for line in stdout.splitlines()[1:]:
        cells = line.split()
        if len(cells) >= 6 and (cells[0] in ("direct", "stepped") or cells[0].startswith("stepped:")):
            rows[cells[0]] = cells
    return rows


class TestValidate:
    def test_shipped_scenarios_are_valid(self):
        for path in (TURION, STEP_DEMO):
            result = run_cli("validate", "--scenario", path)
            assert result.returncode == 0, result.stderr
            assert "OK" in result.stdout

    def test_invalid_scenario_exits_2_and_lists_violations(self, tmp_path):
        doc = json.loads(open(TURION).read())
        doc["processor"]["levels"].reverse()
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        result = run_cli("validate", "--scenario", str(bad))
        assert result.returncode == 2
        assert "not strictly increasing" in result.stderr

    def test_parse_error_exits_2(self, tmp_path):
        bad = tmp_path / "broken.json"
        bad.write_text("{nope")
        result = run_cli("validate", "--scenario", str(bad))
        assert result.returncode == 2
        assert "line" in result.stderr


class TestSimulate:
    def test_writes_report_and_trace(self, tmp_path):
        report = tmp_path / "report.json"
        trace = tmp_path / "trace.csv"
        result = run_cli("simulate", "--scenario", TURION, "--report", str(report), "--trace", str(trace))
        assert result.returncode == 0, result.stderr
        assert "energy_total_j" in result.stdout
        doc = json.loads(report.read_text())
        assert doc["schema_version"] == 1
        assert doc["transitions"]["count"] == 6
        first_line = trace.read_text().splitlines()[0]
        assert first_line == "time_s,freq_hz,power_w,temp_c,cum_wear"

    def test_missing_scenario_exits_1(self, tmp_path):
        result = run_cli("simulate", "--scenario", str(tmp_path / "absent.json"))
        assert result.returncode == 1

    def test_invalid_scenario_exits_2(self, tmp_path):
        doc = json.loads(open(TURION).read())
        doc["sim"]["duration_s"] = 1.0  # shorter than the deadlines
        bad = tmp_path / "short.json"
        bad.write_text(json.dumps(doc))
        result = run_cli("simulate", "--scenario", str(bad))
        assert result.returncode == 2
        assert "sim.duration" in result.stderr


class TestCompare:
    def test_full_span_stepping_cuts_shock_wear_to_a_fifth(self):
        result = run_cli("compare", "--scenario", STEP_DEMO, "--policies", "direct,stepped")
        assert result.returncode == 0, result.stderr
        rows = table_rows(result.stdout)
        direct = float(rows["direct"][4])
        stepped = float(rows["stepped"][4])
        assert math.isclose(stepped, direct / 5.0, rel_tol=1e-9)

    def test_comparison_report_file(self, tmp_path):
        out = tmp_path / "cmp.json"
        result = run_cli(
            "compare", "--scenario", TURION, "--policies", "direct,stepped:0.5", "--report", str(out)
        )
        assert result.returncode == 0
        doc = json.loads(out.read_text())
        assert doc["baseline"] == "direct"
        assert [p["label"] for p in doc["policies"]] == ["direct", "stepped:0.5"]
        assert doc["policies"][1]["newly_missed"]
        assert "newly missed deadlines" in result.stdout

    def test_single_policy_is_a_usage_error(self):
        assert run_cli("compare", "--scenario", STEP_DEMO, "--policies", "direct").returncode == 64

    def test_dwell_on_direct_is_a_usage_error(self):
        result = run_cli("compare", "--scenario", STEP_DEMO, "--policies", "direct:0.5,stepped")
        assert result.returncode == 64


class TestSweep:
    def test_alpha_sweep_rows(self, tmp_path):
        out = tmp_path / "sweep.csv"
        result = run_cli(
            "sweep", "--scenario", STEP_DEMO, "--param", "wear.alpha", "--values", "1,2", "--out", str(out)
        )
        assert result.returncode == 0, result.stderr
        lines = out.read_text().splitlines()
        assert lines[0] == "value,energy_j,shock_wear,thermal_wear,projected_lifetime_s"
        assert len(lines) == 3

    def test_linear_alpha_equalizes_policies(self, tmp_path):
        # run the same sweep under each transition policy; alpha=1 rows must agree
        stepped_doc = json.loads(open(STEP_DEMO).read())
        stepped_doc["policy"] = {"kind": "stepped"}
        stepped_path = tmp_path / "stepped.json"
        stepped_path.write_text(json.dumps(stepped_doc))

        shocks = {}
        for label, path in (("direct", STEP_DEMO), ("stepped", str(stepped_path))):
            result = run_cli("sweep", "--scenario", path, "--param", "wear.alpha", "--values", "1,2")
            assert result.returncode == 0, result.stderr
            rows = [line.split(",") for line in result.stdout.splitlines()[1:]]
            shocks[label] = {float(r[0]): float(r[2]) for r in rows}
        assert math.isclose(shocks["direct"][1.0], shocks["stepped"][1.0], rel_tol=1e-12)
        assert shocks["stepped"][2.0] < shocks["direct"][2.0]

    def test_unknown_parameter_exits_2(self):
        result = run_cli("sweep", "--scenario", STEP_DEMO, "--param", "wear.bogus", "--values", "1")
        assert result.returncode == 2


class TestUsage:
    def test_unknown_subcommand_exits_64(self):
        result = run_cli("launch", "--scenario", TURION)
        assert result.returncode == 64
        assert "usage" in result.stderr.lower()

    def test_unknown_flag_exits_64(self):
        result = run_cli("simulate", "--scenario", TURION, "--turbo")
        assert result.returncode == 64

    def test_no_subcommand_exits_64(self):
        assert run_cli().returncode == 64

import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from byzgather import dumps, instance_to_obj, make_instance
from byzgather.cli import main
from util import LINE3, SQUARE

SVG_NS = "{http://www.w3.org/2000/svg}"


def write_instance(tmp_path, pts, f, name="inst.json"):
    path = tmp_path / name
    path.write_text(dumps(instance_to_obj(make_instance(pts, f))))
    return str(path)


class TestPlanEvalRoundTrip:
    def test_line3_pipeline(self, tmp_path, capsys):
        inst = write_instance(tmp_path, LINE3, 1)
        sched = str(tmp_path / "sched.json")
        assert main(["plan", "--alg", "opt-f1", "--input", inst, "--output", sched]) == 0
        out = capsys.readouterr().out
        assert "algorithm: opt-f1" in out
        assert "horizon: 2.5" in out

        assert main(["eval", "--input", inst, "--schedule", sched]) == 0
        out = capsys.readouterr().out
        assert "schedule valid" in out
        assert "overall_cr: 1.02040816327" in out
        assert "argmax 0x6" in out

        report = str(tmp_path / "report.json")
        assert main(["adversary", "--input", inst, "--schedule", sched, "--output", report]) == 0
        obj = json.loads((tmp_path / "report.json").read_text())
        assert abs(obj["overall_cr"] - 2.5 / 2.45) < 1e-6
        assert obj["argmax_mask"] == 0b110
        assert obj["bound_satisfied"] is True

    def test_reports_bit_identical_between_runs(self, tmp_path, capsys):
        inst = write_instance(tmp_path, SQUARE, 1)
        sched = str(tmp_path / "sched.json")
        rep_a = str(tmp_path / "a.json")
        rep_b = str(tmp_path / "b.json")
        assert main(["plan", "--alg", "auto", "--input", inst, "--output", sched]) == 0
        assert main(["adversary", "--input", inst, "--schedule", sched, "--output", rep_a]) == 0
        assert main(["adversary", "--input", inst, "--schedule", sched, "--output", rep_b]) == 0
        capsys.readouterr()
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()

    def test_schedule_json_round_trips(self, tmp_path, capsys):
        inst = write_instance(tmp_path, LINE3, 1)
        s1 = str(tmp_path / "s1.json")
        s2 = str(tmp_path / "s2.json")
        assert main(["plan", "--alg", "ssi", "--input", inst, "--output", s1]) == 0
        assert main(["plan", "--alg", "ssi", "--input", inst, "--output", s2]) == 0
        capsys.readouterr()
        assert (tmp_path / "s1.json").read_bytes() == (tmp_path / "s2.json").read_bytes()

    def test_eval_subset_selection(self, tmp_path, capsys):
        inst = write_instance(tmp_path, LINE3, 1)
        sched = str(tmp_path / "sched.json")
        assert main(["plan", "--alg", "opt-f1", "--input", inst, "--output", sched]) == 0
        capsys.readouterr()
        assert main(["eval", "--input", inst, "--schedule", sched, "--subsets", "0x6,7"]) == 0
        out = capsys.readouterr().out
        assert "subset 0x6:" in out and "subset 0x7:" in out
        assert "subset 0x3:" not in out


class TestExitCodes:
    def test_missing_file(self, tmp_path, capsys):
        assert main(["plan", "--alg", "mec", "--input", str(tmp_path / "nope.json")]) == 2
        assert "error:" in capsys.readouterr().err

    def test_malformed_json(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["plan", "--alg", "mec", "--input", str(bad)]) == 2
        capsys.readouterr()

    def test_wrong_shape(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"robots": [[0, 0]], "F": 0}')
        assert main(["plan", "--alg", "mec", "--input", str(bad)]) == 2
        capsys.readouterr()

    def test_budget_precondition(self, tmp_path, capsys):
        inst = write_instance(tmp_path, SQUARE, 2)  # F = ceil(4/3) fails centerpoint
        assert main(["plan", "--alg", "centerpoint", "--input", inst]) == 3
        assert "error:" in capsys.readouterr().err

    def test_tri_wrong_size(self, tmp_path, capsys):
        inst = write_instance(tmp_path, SQUARE, 1)
        assert main(["plan", "--alg", "tri", "--input", inst]) == 3
        capsys.readouterr()

    def test_never_gathering_schedule(self, tmp_path, capsys):
        inst = write_instance(tmp_path, [(0.0, 0.0), (4.0, 0.0)], 0)
        sched = tmp_path / "stay.json"
        sched.write_text(
            json.dumps(
                {
                    "algorithm": "mec",
                    "trajectories": [
                        [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]],
                        [[0.0, 4.0, 0.0], [1.0, 4.0, 0.0]],
                    ],
                    "meta": {},
                }
            )
        )
        assert main(["eval", "--input", inst, "--schedule", str(sched)]) == 4
        capsys.readouterr()

    def test_bad_subset_mask(self, tmp_path, capsys):
        inst = write_instance(tmp_path, LINE3, 1)
        sched = str(tmp_path / "sched.json")
        assert main(["plan", "--alg", "mec", "--input", inst, "--output", sched]) == 0
        capsys.readouterr()
        assert main(["eval", "--input", inst, "--schedule", sched, "--subsets", "0x100"]) == 2
        capsys.readouterr()


class TestOracleCommand:
    def test_line3(self, tmp_path, capsys):
        inst = write_instance(tmp_path, LINE3, 1)
        out_json = str(tmp_path / "oracle.json")
        code = main(
            ["oracle", "--input", inst, "--resolution", "1e-4", "--output", out_json]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert out.startswith("D: (")
        assert "cr: 1.02" in out
        obj = json.loads((tmp_path / "oracle.json").read_text())
        assert abs(obj["cr"] - 2.5 / 2.45) < 1e-3
        assert abs(obj["D"][0] - 0.05) < 0.01 and abs(obj["D"][1]) < 0.01

    def test_too_small_is_input_error(self, tmp_path, capsys):
        inst = write_instance(tmp_path, [(0.0, 0.0), (1.0, 0.0)], 0)
        assert main(["oracle", "--input", inst]) == 2
        capsys.readouterr()


class TestPlotCommand:
    def test_svg_parses_with_polyline_per_robot(self, tmp_path, capsys):
        inst = write_instance(tmp_path, LINE3, 1)
        sched = str(tmp_path / "sched.json")
        svg_path = tmp_path / "out.svg"
        assert main(["plan", "--alg", "opt-f1", "--input", inst, "--output", sched]) == 0
        assert main(
            ["plot", "--input", inst, "--schedule", sched, "--output", str(svg_path)]
        ) == 0
        capsys.readouterr()
        root = ET.fromstring(svg_path.read_text())
        assert root.tag == f"{SVG_NS}svg"
        polylines = root.findall(f".//{SVG_NS}polyline")
        assert len(polylines) >= 3
        assert root.findall(f".//{SVG_NS}circle")

    def test_plot_stdout(self, tmp_path, capsys):
        inst = write_instance(tmp_path, SQUARE, 1)
        sched = str(tmp_path / "sched.json")
        assert main(["plan", "--alg", "centerpoint", "--input", inst, "--output", sched]) == 0
        capsys.readouterr()
        assert main(["plot", "--input", inst, "--schedule", sched]) == 0
        out = capsys.readouterr().out
        ET.fromstring(out)


class TestBenchCommand:
    def test_small_run(self, tmp_path, capsys):
        out_json = str(tmp_path / "bench.json")
        assert main(["bench", "--seed", "3", "--per-row", "2", "--output", out_json]) == 0
        out = capsys.readouterr().out
        assert "regime" in out and "worst_cr" in out
        rows = json.loads((tmp_path / "bench.json").read_text())
        assert len(rows) >= 5
        assert all(r["ok"] for r in rows)


class TestConsoleScript:
    def test_help_runs(self):
        proc = subprocess.run(
            [sys.executable, "-m", "byzgather.cli", "--help"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        for name in ("plan", "eval", "adversary", "oracle", "bench", "plot"):
            assert name in proc.stdout

    def test_entry_point(self):
        proc = subprocess.run(
            ["byzgather", "plan", "--help"], capture_output=True, text=True
        )
        assert proc.returncode == 0
        assert "--alg" in proc.stdout

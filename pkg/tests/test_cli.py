import json

import pytest

from pendency.cli import main

HEADER = (
    "date,court_id,pending_civil,pending_criminal,pending_writ,"
    "pending_total,filed_monthly,disposed_monthly"
)


def data_args(fixture_paths) -> list[str]:
    return [
        "--snapshots",
        str(fixture_paths["snapshots"]),
        "--strength",
        str(fixture_paths["strength"]),
        "--overrides",
        str(fixture_paths["overrides"]),
        "--windows",
        str(fixture_paths["windows"]),
    ]


class TestIngestCommand:
    def test_summary(self, fixture_paths, capsys):
        assert main(["ingest", *data_args(fixture_paths)]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["courts"] == 24
        assert out["overrides"] == ["BO", "CA"]
        assert out["findings"]["error"] == 0

    def test_data_dir_shorthand(self, data_dir, capsys):
        assert main(["ingest", "--data-dir", str(data_dir)]) == 0
        assert json.loads(capsys.readouterr().out)["courts"] == 24

    def test_findings_out(self, fixture_paths, tmp_path, capsys):
        target = tmp_path / "findings.csv"
        assert main(["ingest", *data_args(fixture_paths), "--findings-out", str(target)]) == 0
        assert target.read_text().startswith("court_id,date,check,severity,detail")

    def test_missing_inputs(self, capsys):
        assert main(["ingest", "--snapshots", "nope.csv", "--strength", "nope.csv"]) == 1

    def test_no_paths_at_all(self, capsys):
        assert main(["ingest"]) == 1


class TestFitCommand:
    def test_emits_per_court_json(self, fixture_paths, capsys):
        assert main(["fit", *data_args(fixture_paths)]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert len(rows) == 24
        by_id = {r["court_id"]: r for r in rows}
        assert by_id["BO"]["slope_per_day"] == 20.0  # override, not the flat series
        assert by_id["JK"]["window"] == "since 2019-10-01"
        assert set(rows[0]) == {"court_id", "slope_per_day", "p0", "n", "window"}

    def test_degenerate_series_is_exit_2(self, tmp_path, capsys):
        (tmp_path / "snapshots.csv").write_text(HEADER + "\n2020-01-01,ZZ,1,1,1,3,,\n")
        (tmp_path / "strength.csv").write_text(
            "court_id,name,sanctioned,working_avg\nZZ,Z,5,4\n"
        )
        rc = main(
            [
                "fit",
                "--snapshots",
                str(tmp_path / "snapshots.csv"),
                "--strength",
                str(tmp_path / "strength.csv"),
            ]
        )
        assert rc == 2


class TestProjectCommand:
    def test_never_clearing_court(self, fixture_paths, capsys):
        rc = main(["project", *data_args(fixture_paths), "--court", "PH", "--ramp-years", "10"])
        assert rc == 0
        out = json.loads(capsys.readouterr().out)
        assert out["verdict"] == "never_clears"
        assert out["years_to_clear"] is None
        assert out["final_rate"] > 0

    def test_clearing_court_with_trajectory(self, fixture_paths, capsys):
        rc = main(["project", *data_args(fixture_paths), "--court", "TR", "--ramp-years", "10"])
        assert rc == 0
        out = json.loads(capsys.readouterr().out)
        assert out["verdict"] == "clears_in"
        assert out["trajectory"][0]["t"] == 0
        assert out["trajectory"][-1]["p"] <= 0

    def test_disposal_floor_flag(self, fixture_paths, capsys):
        assert (
            main(["project", *data_args(fixture_paths), "--court", "PH", "--ramp-years", "10"])
            == 0
        )
        base = json.loads(capsys.readouterr().out)
        assert base["verdict"] == "never_clears"
        rc = main(
            [
                "project",
                *data_args(fixture_paths),
                "--court",
                "PH",
                "--ramp-years",
                "10",
                "--floor",
                "5.93",
            ]
        )
        assert rc == 0
        floored = json.loads(capsys.readouterr().out)
        assert floored["inputs"]["d_daily"] == 5.93
        assert floored["verdict"] == "clears_in"

    def test_numeric_target(self, fixture_paths, capsys):
        rc = main(
            [
                "project",
                *data_args(fixture_paths),
                "--court",
                "PH",
                "--ramp-years",
                "5",
                "--target",
                "600",
            ]
        )
        assert rc == 0
        out = json.loads(capsys.readouterr().out)
        assert out["inputs"]["target_strength"] == 600
        assert out["verdict"] == "clears_in"

    def test_unknown_court(self, fixture_paths, capsys):
        rc = main(["project", *data_args(fixture_paths), "--court", "ZZ", "--ramp-years", "10"])
        assert rc == 1


class TestSolveCommands:
    def test_solve_judges_rows(self, fixture_paths, capsys):
        assert main(["solve-judges", *data_args(fixture_paths), "--target-years", "5"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert len(rows) == 24
        assert set(rows[0]) == {"court", "required", "sanctioned", "working", "binding"}
        assert all(r["required"] >= r["sanctioned"] for r in rows)

    def test_solve_judges_floor_binds_on_long_deadlines(self, fixture_paths, capsys):
        assert main(["solve-judges", *data_args(fixture_paths), "--target-years", "15"]) == 0
        rows = json.loads(capsys.readouterr().out)
        by_id = {r["court"]: r for r in rows}
        assert by_id["TR"]["required"] == 4
        assert by_id["TR"]["binding"] == "floored_at_sanctioned"

    def test_solve_judges_bad_deadline(self, fixture_paths, capsys):
        assert main(["solve-judges", *data_args(fixture_paths), "--target-years", "1"]) == 1

    def test_zero_rate_rows(self, fixture_paths, capsys):
        assert main(["zero-rate", *data_args(fixture_paths)]) == 0
        rows = json.loads(capsys.readouterr().out)
        by_id = {r["court"]: r for r in rows}
        assert by_id["PH"]["classification"] == "exceeds_sanctioned"
        assert by_id["SI"]["additional_judges"] == 0
        assert sum(1 for r in rows if r["classification"] == "exceeds_sanctioned") == 1


class TestReportCommand:
    def test_writes_requested_formats(self, fixture_paths, tmp_path, capsys):
        rc = main(
            [
                "report",
                *data_args(fixture_paths),
                "--out",
                str(tmp_path),
                "--format",
                "json,markdown-table",
            ]
        )
        assert rc == 0
        written = json.loads(capsys.readouterr().out)["written"]
        assert str(tmp_path / "report.json") in written
        assert (tmp_path / "years_to_clear.md").exists()

    def test_bad_format(self, fixture_paths, tmp_path, capsys):
        rc = main(
            ["report", *data_args(fixture_paths), "--out", str(tmp_path), "--format", "yaml"]
        )
        assert rc == 1

    def test_empty_dataset_warns_but_succeeds(self, tmp_path, capsys):
        (tmp_path / "snapshots.csv").write_text(HEADER + "\n")
        (tmp_path / "strength.csv").write_text("court_id,name,sanctioned,working_avg\n")
        rc = main(
            [
                "report",
                "--snapshots",
                str(tmp_path / "snapshots.csv"),
                "--strength",
                str(tmp_path / "strength.csv"),
                "--out",
                str(tmp_path / "out"),
                "--format",
                "csv",
            ]
        )
        captured = capsys.readouterr()
        assert rc == 0
        assert "empty dataset" in captured.err

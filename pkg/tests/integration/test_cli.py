"""
Integration tests for the propernet command line.

Each test runs ``main`` end to end on a small CSV log and inspects the
written output file and the exit code.
"""

import json
import os
from unittest.mock import patch

import pandas as pd
import pytest

from propernet.commands import subcommands
from propernet.commands.cli import main
from propernet.commands.subcommands import (
    INVENTORY_COLUMNS,
    SIMILARITY_COLUMNS,
    STATS_COLUMNS,
    TOPOLOGY_COLUMNS,
    ExtractCommand,
)
from propernet.error_handling import EXIT_DATA, EXIT_OK, EXIT_USAGE
from propernet.metrics.similarity import Metric, series
from propernet.network.ingest import extract, parse
from propernet.segmentation.report import read_report

from tests.fixtures.sample_data import EMPTY_CSV, drift_nodes, dyadic_csv, planted_regimes

pytestmark = pytest.mark.integration


def _run(*args):
    return main([str(a) for a in args])


def _read(path):
    return pd.read_csv(path, float_precision="round_trip")


class TestExtractCommand:
    """propernet extract"""

    def test_inventory_per_epsilon(self, dyadic_ten_windows_file, tmp_path):
        """Test one inventory row per window per epsilon."""
        out = tmp_path / "inventory.csv"
        code = _run("extract", "--input", dyadic_ten_windows_file, "--format", "dyadic",
                    "--epsilon", "60,2m", "--out", out)

        assert code == EXIT_OK
        frame = _read(out)
        assert list(frame.columns) == INVENTORY_COLUMNS
        assert frame.groupby("epsilon").size().to_dict() == {60: 10, 120: 5}
        assert frame["window_start"].tolist()[:3] == [0, 60, 120]

    def test_wap_counts_reflect_cleaning(self, wap_mergeable_file, tmp_path):
        """Test merged sessions and dropped incomplete records in the node counts."""
        out = tmp_path / "inventory.csv"
        assert _run("extract", "--input", wap_mergeable_file, "--format", "wap",
                    "--epsilon", "10", "--out", out) == EXIT_OK

        frame = _read(out)
        assert frame["node_count"].tolist() == [2, 2, 2, 1]
        assert frame["link_count"].tolist() == [1, 1, 1, 0]
        assert frame["window_end"].tolist()[-1] == 31

    def test_empty_input_is_data_error(self, write_log, tmp_path, capsys):
        """Test an empty input file exits with code 2 and writes nothing."""
        out = tmp_path / "inventory.csv"
        code = _run("extract", "--input", write_log(EMPTY_CSV), "--format", "dyadic",
                    "--epsilon", "60", "--out", out)

        assert code == EXIT_DATA
        assert not out.exists()
        assert "error" in capsys.readouterr().err

    def test_missing_input_file(self, tmp_path):
        """Test a missing input file is a data error."""
        code = _run("extract", "--input", tmp_path / "nope.csv", "--format", "dyadic",
                    "--epsilon", "60", "--out", tmp_path / "out.csv")
        assert code == EXIT_DATA

    def test_unwritable_output(self, dyadic_ten_windows_file, tmp_path):
        """Test an output path in a missing directory is a data error."""
        code = _run("extract", "--input", dyadic_ten_windows_file, "--format", "dyadic",
                    "--epsilon", "60", "--out", tmp_path / "missing" / "out.csv")
        assert code == EXIT_DATA

    def test_unexpected_failure_leaves_no_output(self, dyadic_ten_windows_file, tmp_path, mocker):
        """Test an unexpected exception maps to exit 2 without a partial file."""
        mocker.patch.object(ExtractCommand, "execute", side_effect=RuntimeError("boom"))
        out = tmp_path / "inventory.csv"
        code = _run("extract", "--input", dyadic_ten_windows_file, "--format", "dyadic",
                    "--epsilon", "60", "--out", out)

        assert code == EXIT_DATA
        assert not out.exists()


class TestUsageErrors:
    """Flag problems exit with code 1."""

    @pytest.mark.parametrize("args", [
        ["extract", "--format", "dyadic", "--epsilon", "60", "--out", "x.csv"],
        ["extract", "--input", "x.csv", "--format", "dyadic", "--out", "x.csv"],
        ["extract", "--input", "x.csv", "--format", "syslog", "--epsilon", "60", "--out", "x.csv"],
        ["segment", "--input", "x.csv", "--format", "dyadic", "--epsilon", "60", "--alpha", "1.5", "--out", "x.csv"],
        ["segment", "--input", "x.csv", "--format", "dyadic", "--epsilon", "0", "--out", "x.csv"],
        ["stats", "--input", "x.csv", "--format", "dyadic", "--epsilon", "60", "--metric", "pagerank",
         "--out", "x.csv"],
        ["cluster", "--input", "x.csv"],
        [],
    ])
    def test_bad_flags(self, args):
        """Test invalid invocations exit with the usage code."""
        assert main(args) == EXIT_USAGE

    def test_segment_needs_node_or_link(self, dyadic_ten_windows_file, tmp_path):
        """Test segment rejects metric lists without a null model."""
        code = _run("segment", "--input", dyadic_ten_windows_file, "--format", "dyadic",
                    "--epsilon", "60", "--metric", "neighbor,gamma", "--out", tmp_path / "s.csv")
        assert code == EXIT_USAGE

    def test_invalid_environment(self, dyadic_ten_windows_file, tmp_path):
        """Test a bad PROPERNET_* variable is a configuration error."""
        with patch.dict(os.environ, {"PROPERNET_ALPHA": "2"}):
            code = _run("extract", "--input", dyadic_ten_windows_file, "--format", "dyadic",
                        "--epsilon", "60", "--out", tmp_path / "out.csv")
        assert code == EXIT_USAGE

    def test_help(self, capsys):
        """Test --help exits cleanly."""
        assert main(["--help"]) == EXIT_OK
        assert "extract" in capsys.readouterr().out


class TestSimilarityCommand:
    """propernet similarity"""

    def test_identical_windows(self, dyadic_identical_file, tmp_path):
        """Test three identical windows give eight rows scoring 1.0."""
        out = tmp_path / "similarity.csv"
        assert _run("similarity", "--input", dyadic_identical_file, "--format", "dyadic",
                    "--epsilon", "60", "--out", out) == EXIT_OK

        frame = _read(out)
        assert list(frame.columns) == SIMILARITY_COLUMNS
        assert len(frame) == 8
        assert (frame["score"] == 1.0).all()
        assert frame["metric"].tolist()[:4] == ["node", "link", "neighbor", "gamma"]
        other = frame[frame["metric"].isin(["neighbor", "gamma"])]
        assert other["threshold_jaccard"].isna().all()
        assert other["significant"].isna().all()

    def test_thresholds_on_null_model_metrics(self, write_log, tmp_path):
        """Test node and link rows carry thresholds and significance."""
        log = write_log(dyadic_csv(planted_regimes(0), 60), "planted.csv")
        out = tmp_path / "similarity.csv"
        assert _run("similarity", "--input", log, "--format", "dyadic", "--epsilon", "60",
                    "--metric", "link", "--out", out) == EXIT_OK

        frame = _read(out)
        assert frame["threshold_jaccard"].notna().all()
        assert frame["significant"].tolist().count(True) == 1
        assert frame.loc[frame["significant"] == True, "next_start"].tolist() == [360]  # noqa: E712

    def test_scores_round_trip_exactly(self, dyadic_ten_windows_file, tmp_path):
        """Test scores read back from CSV equal the computed series bit for bit."""
        out = tmp_path / "similarity.csv"
        assert _run("similarity", "--input", dyadic_ten_windows_file, "--format", "dyadic",
                    "--epsilon", "60", "--metric", "neighbor", "--out", out) == EXIT_OK

        expected = series(extract(parse(dyadic_ten_windows_file, "dyadic"), 60), Metric.NEIGHBOR).values
        assert tuple(_read(out)["score"].tolist()) == expected

    def test_too_few_windows(self, dyadic_triangle_file, tmp_path):
        """Test a single window is a data error."""
        code = _run("similarity", "--input", dyadic_triangle_file, "--format", "dyadic",
                    "--epsilon", "60", "--out", tmp_path / "s.csv")
        assert code == EXIT_DATA

    def test_scores_computed_once_per_pair(self, dyadic_ten_windows_file, tmp_path, mocker):
        """Test the window-count check does not build whole series up front."""
        spy = mocker.spy(subcommands, "series")
        compare_spy = mocker.spy(subcommands, "compare")
        assert _run("similarity", "--input", dyadic_ten_windows_file, "--format", "dyadic",
                    "--epsilon", "60", "--metric", "node,link", "--out", tmp_path / "s.csv") == EXIT_OK
        assert spy.call_count == 0
        assert compare_spy.call_count == 2 * 9


class TestStatsCommand:
    """propernet stats"""

    def test_one_row_per_epsilon_and_metric(self, dyadic_ten_windows_file, tmp_path):
        """Test the table size and one recommendation per metric."""
        out = tmp_path / "stats.csv"
        assert _run("stats", "--input", dyadic_ten_windows_file, "--format", "dyadic",
                    "--epsilon", "60,120", "--out", out) == EXIT_OK

        frame = _read(out)
        assert list(frame.columns) == STATS_COLUMNS
        assert len(frame) == 2 * 4
        assert frame.groupby("metric")["recommended"].sum().to_dict() == {
            "gamma": 1, "link": 1, "neighbor": 1, "node": 1
        }

    def test_constant_series(self, dyadic_identical_file, tmp_path):
        """Test a constant series has zero variance and diversity 1/u."""
        out = tmp_path / "stats.csv"
        assert _run("stats", "--input", dyadic_identical_file, "--format", "dyadic",
                    "--epsilon", "60", "--metric", "link", "--out", out) == EXIT_OK

        row = _read(out).iloc[0]
        assert row["variance"] == 0.0
        assert row["string_diversity"] == 0.5


class TestSegmentCommand:
    """propernet segment"""

    def test_planted_boundary(self, write_log, tmp_path):
        """Test a two-regime log yields one cut at the planted boundary."""
        log = write_log(dyadic_csv(planted_regimes(0), 60), "planted.csv")
        out = tmp_path / "segments.csv"
        assert _run("segment", "--input", log, "--format", "dyadic", "--epsilon", "60",
                    "--metric", "link", "--out", out) == EXIT_OK

        frame = _read(out)
        assert frame[frame["record"] == "cut"]["start"].tolist() == [360]
        assert frame[frame["record"] == "duration"]["duration"].tolist() == [360, 360]
        (summary,) = read_report(out)
        assert summary.cut_points == (360,)

    def test_tiny_alpha_never_cuts_more(self, write_log, tmp_path):
        """Test alpha 1e-9 produces at most one cut and no more than alpha 0.05."""
        log = write_log(dyadic_csv(planted_regimes(0), 60), "planted.csv")
        cuts = {}
        for alpha in ("0.05", "1e-9"):
            out = tmp_path / f"segments-{alpha}.json"
            assert _run("segment", "--input", log, "--format", "dyadic", "--epsilon", "60", "--metric", "link",
                        "--alpha", alpha, "--emit", "json", "--out", out) == EXIT_OK
            (summary,) = read_report(out)
            cuts[alpha] = len(summary.cut_points)
        assert cuts["1e-9"] <= 1
        assert cuts["1e-9"] <= cuts["0.05"]

    def test_json_report_per_epsilon_and_metric(self, write_log, tmp_path):
        """Test the JSON output holds one report per epsilon and metric."""
        log = write_log(dyadic_csv(planted_regimes(0), 60), "planted.csv")
        out = tmp_path / "segments.json"
        assert _run("segment", "--input", log, "--format", "dyadic", "--epsilon", "60,120",
                    "--emit", "json", "--out", out) == EXIT_OK

        reports = json.loads(out.read_text())
        assert [(r["epsilon"], r["metric"]) for r in reports] == [
            (60, "node"), (60, "link"), (120, "node"), (120, "link")
        ]
        assert all(sum(r["durations"]) + r["ragged_tail"] == 720 for r in reports)

    def test_output_is_deterministic(self, write_log, tmp_path):
        """Test two runs on the same input write identical bytes."""
        log = write_log(dyadic_csv(planted_regimes(5), 60), "planted.csv")
        outputs = []
        for name in ("first.csv", "second.csv"):
            out = tmp_path / name
            assert _run("segment", "--input", log, "--format", "dyadic", "--epsilon", "60,3m",
                        "--mode", "aggregate", "--out", out) == EXIT_OK
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_aggregate_mode_cuts_slow_drift(self, write_log, tmp_path):
        """Test a node set sliding two ids per window is cut only against the running aggregate."""
        windows = [list(zip(nodes, nodes[1:])) for nodes in drift_nodes()]
        log = write_log(dyadic_csv(windows, 60), "drift.csv")
        summaries = {}
        for mode in ("consecutive", "aggregate"):
            out = tmp_path / f"segments-{mode}.json"
            assert _run("segment", "--input", log, "--format", "dyadic", "--epsilon", "60", "--metric", "node",
                        "--mode", mode, "--emit", "json", "--out", out) == EXIT_OK
            (summaries[mode],) = read_report(out)
        assert summaries["consecutive"].cut_points == ()
        assert len(summaries["aggregate"].cut_points) >= 1
        assert all(sum(s.durations) + s.ragged_tail == 6000 for s in summaries.values())


class TestTopologyCommand:
    """propernet topology"""

    def test_triangle(self, dyadic_triangle_file, tmp_path):
        """Test a triangle window has transitivity 1.0."""
        out = tmp_path / "topology.csv"
        assert _run("topology", "--input", dyadic_triangle_file, "--format", "dyadic",
                    "--epsilon", "60", "--out", out) == EXIT_OK

        frame = _read(out)
        assert list(frame.columns) == TOPOLOGY_COLUMNS
        assert frame["transitivity"].tolist() == [1.0]

    def test_row_counts_match_extract(self, dyadic_ten_windows_file, tmp_path):
        """Test one topology row per extracted window."""
        inventory, topology = tmp_path / "inventory.csv", tmp_path / "topology.csv"
        for command, out in (("extract", inventory), ("topology", topology)):
            assert _run(command, "--input", dyadic_ten_windows_file, "--format", "dyadic",
                        "--epsilon", "60,5m", "--out", out) == EXIT_OK

        assert _read(topology)["window_start"].tolist() == _read(inventory)["window_start"].tolist()

    def test_summary(self, dyadic_ten_windows_file, tmp_path):
        """Test --summary writes one averaged row per epsilon."""
        out = tmp_path / "summary.json"
        assert _run("topology", "--input", dyadic_ten_windows_file, "--format", "dyadic",
                    "--epsilon", "60,5m", "--summary", "--emit", "json", "--out", out) == EXIT_OK

        rows = json.loads(out.read_text())
        assert [row["epsilon"] for row in rows] == [60, 300]
        assert rows[0]["snapshots"] == 10
        assert rows[0]["node_count"] > 0

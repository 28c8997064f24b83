"""Tests for the phi-reduction and square-embed experiments."""
from fractions import Fraction

import pytest

from halt.encodings import is_square, phi
from halt_cli.config import ExperimentConfig
from halt_cli.experiments import (
    PHI_REDUCTION_COLUMNS,
    phi_reduction_report,
    phi_reduction_rows,
    square_embed_report,
)
from halt_universal.universal import u_phi_eval, v_eval


class TestPhiReduction:
    """Test the phi-pullback reduction experiment."""

    def test_fifty_of_fifty(self):
        config = ExperimentConfig(n=1000, budget=10**5)
        report = phi_reduction_report(config, 50)
        assert report.summary["samples"] == 50
        assert report.summary["matches"] == 50
        assert report.summary["all_match"]

    def test_rows_satisfy_reduction(self):
        for row in phi_reduction_rows(ExperimentConfig(n=300, budget=1000), 20):
            assert row.theta is not None
            assert phi(row.theta) == row.n
            assert not is_square(row.theta)
            assert u_phi_eval(row.theta, 1000) == v_eval(row.n, 1000)
            assert row.match

    def test_nothing_below_image(self):
        assert phi_reduction_rows(ExperimentConfig(n=6, budget=10**5), 50) == []

    def test_seed_is_reproducible(self):
        config = ExperimentConfig(n=500, budget=1000, seed=7)
        first = phi_reduction_rows(config, 10)
        assert first == phi_reduction_rows(config, 10)
        assert all(row.match for row in first)

    def test_cap_exceeded_is_a_row(self):
        # 64 is the only fiber element searched for n = 7, and it is a square
        rows = phi_reduction_rows(ExperimentConfig(n=7, budget=100), 1, fiber_span=0)
        assert len(rows) == 1
        assert rows[0].n == 7
        assert rows[0].error == "cap-exceeded"
        assert not rows[0].match

    def test_rejects_other_universal(self):
        with pytest.raises(ValueError, match="base_v"):
            phi_reduction_rows(ExperimentConfig(universal="square_embed", n=20, budget=100), 1)

    def test_columns(self):
        report = phi_reduction_report(ExperimentConfig(n=20, budget=100), 1)
        assert report.columns == PHI_REDUCTION_COLUMNS
        assert len(report.rows[0]) == len(PHI_REDUCTION_COLUMNS)


class TestSquareEmbedExperiment:
    """Test the square-embed experiment."""

    def test_unrefuted_and_dominating(self):
        report, refuted = square_embed_report(ExperimentConfig(n=10_000, budget=100))
        assert not refuted
        assert report.summary["lower_bound_dominates"]
        assert report.summary["witness"]["verdict"] == "unrefuted"
        assert [row[0] for row in report.rows] == ["halting_lower_bound", "nonsquares_exact"]
        assert report.rows[1][2] == 9900

    def test_summary_labels_both_densities(self):
        report, _ = square_embed_report(ExperimentConfig(n=10_000, budget=100))
        assert report.summary["lower_bound_class"] == "generic-like"
        assert report.summary["nonsquares_class"] == "generic-like"
        assert report.summary["tol"] == "1/100"

    def test_tight_tolerance_changes_label(self):
        report, _ = square_embed_report(ExperimentConfig(n=100, budget=100), tol=Fraction(0))
        assert report.summary["nonsquares_class"] == "intermediate"

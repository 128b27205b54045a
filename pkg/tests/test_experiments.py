"""
图表复现实验测试
"""

import math

import pytest

from src.core.experiments import (
    ReproducePipeline,
    compare_complexity,
    line_grid,
    rate_grid,
    reproduce_fig2,
    reproduce_fig3_fig4,
    reproduce_fig5,
    reproduce_fig6,
)
from src.core.experiments.base_experiment import PLOT_CEILING
from src.core.exceptions import DomainError
from src.core.models import ComplexityKind, Figure, NetworkKind

LN2 = math.log(2.0)


def _pick(rows: list[dict], **criteria) -> dict:
    matches = [row for row in rows if all(row[k] == v for k, v in criteria.items())]
    assert len(matches) == 1, f"{criteria} 匹配 {len(matches)} 行"
    return matches[0]


class TestGrids:
    def test_line_grid(self):
        grid = line_grid()
        assert grid[0] == 1e-4
        assert grid[1] == pytest.approx(0.0101)
        assert grid[-1] == 1.0
        assert all(a < b for a, b in zip(grid, grid[1:], strict=False))

    def test_rate_grid(self):
        grid = rate_grid()
        assert grid[0] == 1e-4
        assert grid[1] == 0.5
        assert grid[-1] == 7.0
        assert len(grid) == 15

    def test_invalid_line_grid(self):
        with pytest.raises(DomainError):
            line_grid(0.0)


class TestPowerAssignment:
    def test_figure_values(self):
        rows = reproduce_fig2().rows()
        assert len(rows) == 18
        assert _pick(rows, alpha=3.0, node=0)["power_db"] == pytest.approx(-20.9691, abs=1e-4)
        assert _pick(rows, alpha=3.0, node=5)["power_db"] == pytest.approx(-21.7338, abs=1e-3)
        assert _pick(rows, alpha=4.0, node=1)["power_db"] == pytest.approx(-28.2391, abs=1e-3)
        assert _pick(rows, alpha=5.0, node=0)["power_db"] == pytest.approx(-34.9485, abs=1e-4)

    def test_sorted_by_alpha_then_node(self):
        rows = reproduce_fig2(alphas=(5.0, 3.0)).rows()
        keys = [(row["alpha"], row["node"]) for row in rows]
        assert keys == sorted(keys)

    def test_each_curve_decreasing(self):
        rows = reproduce_fig2().rows()
        for alpha in (3.0, 4.0, 5.0):
            curve = [row["power_db"] for row in rows if row["alpha"] == alpha]
            assert all(a > b for a, b in zip(curve, curve[1:], strict=False))


class TestEnergyCurves:
    def test_known_points(self):
        rows = reproduce_fig3_fig4(relay_counts=(0, 1), deltas=(0.5, LN2, 0.7, 1.0)).rows()
        assert len(rows) == 8
        assert _pick(rows, n=0, delta_t=0.5)["e_tx_exact"] == pytest.approx(1.5, abs=1e-3)
        assert _pick(rows, n=0, delta_t=0.5)["e_c_norm"] == pytest.approx(1.0)
        assert _pick(rows, n=1, delta_t=0.5)["e_tx_fixed"] == pytest.approx(0.265625, abs=1e-6)
        assert _pick(rows, n=0, delta_t=LN2)["e_c_norm"] == pytest.approx(0.94208, abs=1e-4)
        assert _pick(rows, n=1, delta_t=0.7)["e_c_norm"] == pytest.approx(1.8843, abs=1e-3)
        full = _pick(rows, n=1, delta_t=1.0)
        assert full["e_c_norm"] == pytest.approx(2.0)
        assert full["overflow"] is False

    def test_overflow_is_flagged(self):
        rows = reproduce_fig3_fig4(relay_counts=(1,), deltas=(1e-4, 1.0)).rows()
        tiny = _pick(rows, delta_t=1e-4)
        assert tiny["overflow"] is True
        assert tiny["e_c_norm"] is None
        assert _pick(rows, delta_t=1.0)["overflow"] is False

    def test_clipped_marker(self):
        rows = reproduce_fig3_fig4(relay_counts=(2,), deltas=(0.05, 1.0)).rows()
        assert _pick(rows, delta_t=0.05)["clipped_in_paper"] is True
        assert _pick(rows, delta_t=1.0)["clipped_in_paper"] is False

    def test_marker_grid(self):
        rows = reproduce_fig3_fig4(relay_counts=(1,)).rows()
        marked = [row for row in rows if row["marker"]]
        assert len(marked) == 20
        assert marked[0]["delta_t"] == 1e-4
        assert marked[-1]["delta_t"] == pytest.approx(0.9501)
        assert _pick(rows, delta_t=1.0)["marker"] is False
        middle = _pick(marked, delta_t=pytest.approx(0.5001))
        assert middle["e_tx_fixed"] == pytest.approx(0.26562, abs=1e-5)

    def test_parameters_echoed(self):
        row = reproduce_fig3_fig4(relay_counts=(1,), deltas=(1.0,)).rows()[0]
        assert row["r_ref"] == 1.0
        assert row["alpha"] == 3.0
        assert row["sigma2"] == 1.0

    def test_fixed_never_below_exact(self):
        rows = reproduce_fig3_fig4(deltas=(0.2, 0.5, 0.8, 1.0)).rows()
        for row in rows:
            assert row["e_tx_fixed"] >= row["e_tx_exact"] * (1 - 1e-12)


class TestTradeoff:
    def test_points(self):
        rows = reproduce_fig5(r_values=(0.1, 2.0)).rows()
        assert len(rows) == 2 * 2 * 30
        low = _pick(rows, r_ref=0.1, network="fixed", n=1)
        assert low["e_tx_norm"] == pytest.approx(0.26563, abs=1e-4)
        assert low["e_c_norm"] == pytest.approx(0.35160, abs=1e-4)
        wireless = _pick(rows, r_ref=2.0, network="wireless", n=1)
        assert wireless["e_tx_norm"] == pytest.approx(0.23438, abs=1e-5)
        assert wireless["e_c_norm"] == pytest.approx(2.0)
        far = _pick(rows, r_ref=2.0, network="fixed", n=30)
        assert far["e_tx_norm"] == pytest.approx(1 / 961)
        assert far["e_c_norm"] == pytest.approx(31.0)

    def test_delta_echo(self):
        rows = reproduce_fig5(r_values=(0.1,), relay_counts=(1, 2)).rows()
        assert all(row["delta_t"] == pytest.approx(0.1 * LN2) for row in rows)


class TestOptimalNetwork:
    def test_rate_two_row(self):
        table = reproduce_fig6(
            eta1_db_values=(0.0,),
            r_values=(2.0,),
            models=(ComplexityKind.EXPONENTIAL,),
            network_kinds=(NetworkKind.WIRELESS,),
        )
        (row,) = table.rows()
        assert row["best_n"] == 1
        assert row["e_sum_norm"] == pytest.approx(0.94062, abs=1e-4)
        assert row["relaying_beneficial"] is True
        assert row["n_max"] == 64
        assert row["eta1_db"] == 0.0

    def test_linear_model_row(self):
        table = reproduce_fig6(
            eta1_db_values=(0.0,),
            r_values=(3.0,),
            models=(ComplexityKind.LINEAR,),
            network_kinds=(NetworkKind.WIRELESS,),
        )
        (row,) = table.rows()
        assert row["best_n"] == 1
        assert row["delta_t"] == 1.0
        assert row["e_sum_norm"] == pytest.approx(1.11880, abs=1e-4)

    def test_best_n_points(self):
        rows = reproduce_fig6(
            eta1_db_values=(-10.0, -20.0),
            r_values=(1e-4, 0.5, 7.0),
            models=(ComplexityKind.EXPONENTIAL,),
            network_kinds=(NetworkKind.WIRELESS,),
        ).rows()
        assert _pick(rows, eta1_db=-10.0, r_ref=0.5)["best_n"] == 2
        assert _pick(rows, eta1_db=-20.0, r_ref=7.0)["best_n"] == 6
        assert _pick(rows, eta1_db=-20.0, r_ref=1e-4)["best_n"] == 4

    def test_breakdown_consistency(self):
        rows = reproduce_fig6(
            eta1_db_values=(0.0, -20.0),
            r_values=(0.5, 3.0),
            n_max=16,
        ).rows()
        assert len(rows) == 2 * 2 * 2 * 2
        for row in rows:
            expected = (row["e_c_norm"] * row["eta"] + row["e_tx_norm"]) / (1 + row["eta"])
            assert row["e_sum_norm"] == pytest.approx(expected, rel=1e-9)
            assert row["clipped_in_paper"] is (row["e_sum_norm"] > PLOT_CEILING)

    def test_deterministic(self):
        kwargs = {"eta1_db_values": (-10.0,), "r_values": (0.5, 1.0), "n_max": 8}
        assert reproduce_fig6(**kwargs).rows() == reproduce_fig6(**kwargs).rows()


class TestComplexityComparison:
    def test_rows(self):
        rows = compare_complexity(eta1_db_values=(0.0,), r_values=(1.0, 5.0), n_max=16).rows()
        assert len(rows) == 2
        for row in rows:
            energies = {"exp": row["exp_e_sum_norm"], "linear": row["linear_e_sum_norm"]}
            assert energies[row["preferred"]] == min(energies.values())


class TestPipeline:
    def test_fig3_and_fig4_share_one_table(self):
        pipeline = ReproducePipeline()
        assert list(pipeline.run(Figure.FIG3)) == ["fig3_fig4"]
        assert list(pipeline.run(Figure.FIG4)) == ["fig3_fig4"]

    def test_fig2_divisor(self):
        tables = ReproducePipeline(divisor=2).run(Figure.FIG2)
        row = _pick(tables["fig2"].rows(), alpha=3.0, node=0)
        assert row["power_db"] == pytest.approx(10 * math.log10(1 / 8), abs=1e-6)

    def test_expand_all(self):
        figures = ReproducePipeline()._expand(Figure.ALL)
        assert Figure.ALL not in figures
        assert Figure.COMPLEXITY in figures

    def test_energy_curves_use_reference_rate(self):
        tables = ReproducePipeline(r_ref=2.0).run(Figure.FIG3)
        rows = tables["fig3_fig4"].rows()
        assert {row["r_ref"] for row in rows} == {2.0}
        full = _pick(rows, n=0, delta_t=1.0)
        assert full["e_c_norm"] == pytest.approx(1.0)
        assert full["e_tx_exact"] == pytest.approx(1.0)

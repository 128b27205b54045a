"""
图表复现实验
每个实验产生一组带完整参数回显的 SweepRecord
"""

from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import product
from typing import ClassVar

import numpy as np

from ..energy.bursty import e_tx_norm_exact, e_tx_norm_fixed
from ..energy.complexity import comp_optimal_delta, e_c_norm
from ..exceptions import DomainError
from ..models import (
    ComplexityKind,
    ComplexityModel,
    NetworkKind,
    ReferenceSystem,
    Scenario,
    SweepRecord,
)
from ..network.channel import db_to_linear, linear_to_db
from ..network.power_alloc import RecursivePowerAllocator, recursive_allocation
from ..optimize.optimizer import NetworkOptimizer
from ..optimize.tradeoff import tradeoff_curve
from .base_experiment import BaseExperiment, Cell


def line_grid(start: float = 1e-4, step: float = 0.01) -> tuple[float, ...]:
    """δ_t 网格 start, start+step, …，末点补齐为 1"""
    if not (0 < start <= 1 and step > 0):
        raise DomainError(f"非法网格参数 start={start}, step={step}")
    grid = np.round(np.arange(start, 1.0 + 1e-12, step), 10)
    if grid[-1] < 1.0:
        grid = np.append(grid, 1.0)
    return tuple(float(v) for v in grid)


def rate_grid(stop: float = 7.0, step: float = 0.5, low_rate: float = 1e-4) -> tuple[float, ...]:
    """R_ref 网格 0, step, …, stop，R=0 用 low_rate 代替"""
    grid = np.round(np.arange(0.0, stop + step / 2, step), 10)
    return tuple(low_rate if v == 0 else float(v) for v in grid)


def _model_for(kind: ComplexityKind, snr_gap_db: float) -> ComplexityModel:
    match kind:
        case ComplexityKind.LINEAR:
            return ComplexityModel.linear(snr_gap_db)
        case ComplexityKind.EXPONENTIAL:
            return ComplexityModel.exponential()


@dataclass
class PowerAssignmentExperiment(BaseExperiment):
    """递推功率分配（dB，相对 P_ref）"""

    name: ClassVar[str] = "fig2"
    columns: ClassVar[tuple[str, ...]] = ("alpha", "node", "power_db")

    alphas: tuple[float, ...] = (3.0, 4.0, 5.0)
    divisor: int = 5
    p_ref: float = 1.0
    last_node: int = 5

    def __post_init__(self) -> None:
        if not self.alphas:
            raise DomainError("alpha 列表不能为空")
        if self.divisor < 1:
            raise DomainError(f"divisor 必须 ≥ 1，实际为 {self.divisor}")
        if self.last_node < 0:
            raise DomainError(f"last_node 必须 ≥ 0，实际为 {self.last_node}")

    def _cells(self) -> Iterable[Cell]:
        return [(alpha,) for alpha in set(self.alphas)]

    def _evaluate_cell(self, cell: Cell) -> list[SweepRecord]:
        (alpha,) = cell
        p0 = self.divisor ** (-alpha) * self.p_ref
        powers = RecursivePowerAllocator(alpha).extend(p0, self.last_node + 1)
        return [
            SweepRecord(
                scenario_id=self.name,
                variable="node",
                value=node,
                outputs={
                    "power_db": linear_to_db(power / self.p_ref),
                    "power_linear": power,
                },
                parameters={"alpha": alpha, "divisor": self.divisor, "pref": self.p_ref},
            )
            for node, power in enumerate(powers)
        ]


@dataclass
class EnergyCurveExperiment(BaseExperiment):
    """归一化发射能量（精确解与固定网络闭式解）和计算能量随 δ_t 的变化"""

    name: ClassVar[str] = "fig3_fig4"
    columns: ClassVar[tuple[str, ...]] = (
        "n", "delta_t", "e_tx_exact", "e_tx_fixed", "e_c_norm",
        "overflow", "clipped_in_paper", "marker", "r_ref", "alpha", "sigma2",
    )

    relay_counts: tuple[int, ...] = (0, 1, 2)
    r_ref: float = 1.0
    alpha: float = 3.0
    sigma2: float = 1.0
    deltas: tuple[float, ...] = field(default_factory=line_grid)
    model: ComplexityModel = field(default_factory=ComplexityModel.exponential)
    marker_step: float = 0.05

    def __post_init__(self) -> None:
        if any(not (0 < d <= 1) for d in self.deltas):
            raise DomainError("δ_t 网格必须位于 (0, 1]")
        if not self.marker_step > 0:
            raise DomainError(f"标记网格步长必须 > 0，实际为 {self.marker_step}")

    def _cells(self) -> Iterable[Cell]:
        return product(set(self.relay_counts), set(self.deltas))

    def _on_marker_grid(self, delta_t: float) -> bool:
        """δ_t 是否落在以网格起点为原点、步长 marker_step 的标记网格上"""
        steps = (delta_t - min(self.deltas)) / self.marker_step
        return abs(steps - round(steps)) < 1e-6

    def _evaluate_cell(self, cell: Cell) -> list[SweepRecord]:
        n, delta_t = cell
        p_ref = ReferenceSystem.from_rate(self.r_ref, self.sigma2).reference_power
        alloc = recursive_allocation(n, self.alpha, p_ref)

        e_exact, over_exact = self._guarded(
            lambda: e_tx_norm_exact(alloc, delta_t, p_ref, self.sigma2)
        )
        e_fixed, over_fixed = self._guarded(
            lambda: e_tx_norm_fixed(n, self.alpha, delta_t, p_ref, self.sigma2)
        )
        e_c, over_c = self._guarded(lambda: e_c_norm(n, delta_t, self.r_ref, self.model))

        return [
            SweepRecord(
                scenario_id=self.name,
                variable="delta_t",
                value=delta_t,
                outputs={
                    "e_tx_exact": e_exact,
                    "e_tx_fixed": e_fixed,
                    "e_c_norm": e_c,
                    "overflow": over_exact or over_fixed or over_c,
                    "clipped_in_paper": self._clipped(e_exact, e_fixed, e_c),
                    "marker": self._on_marker_grid(delta_t),
                },
                parameters={
                    "n": n,
                    "r_ref": self.r_ref,
                    "alpha": self.alpha,
                    "sigma2": self.sigma2,
                    "model": self.model.kind.value,
                },
            )
        ]


@dataclass
class TradeoffExperiment(BaseExperiment):
    """计算最优 δ_t 下的 (e_tx, e_c) 权衡曲线，无线与固定网络各一条"""

    name: ClassVar[str] = "fig5"
    columns: ClassVar[tuple[str, ...]] = (
        "r_ref", "network", "n", "e_tx_norm", "e_c_norm", "delta_t", "alpha", "sigma2", "model",
    )

    r_values: tuple[float, ...] = (0.1, 2.0)
    relay_counts: tuple[int, ...] = tuple(range(1, 31))
    alpha: float = 3.0
    sigma2: float = 1.0
    network_kinds: tuple[NetworkKind, ...] = (NetworkKind.WIRELESS, NetworkKind.FIXED)
    model: ComplexityModel = field(default_factory=ComplexityModel.exponential)

    def __post_init__(self) -> None:
        if not self.relay_counts:
            raise DomainError("N 范围不能为空")

    def _cells(self) -> Iterable[Cell]:
        return product(set(self.r_values), {kind.value for kind in self.network_kinds})

    def _evaluate_cell(self, cell: Cell) -> list[SweepRecord]:
        r_ref, kind = cell
        network_kind = NetworkKind(kind)
        relay_counts = sorted(set(self.relay_counts))
        points = tradeoff_curve(
            r_ref, self.alpha, self.sigma2, relay_counts, network_kind, self.model
        )
        delta_t = comp_optimal_delta(r_ref, self.model)
        return [
            SweepRecord(
                scenario_id=self.name,
                variable="n",
                value=n,
                outputs={"e_tx_norm": e_tx, "e_c_norm": e_c, "delta_t": delta_t},
                parameters={
                    "r_ref": r_ref,
                    "network": network_kind.value,
                    "alpha": self.alpha,
                    "sigma2": self.sigma2,
                    "model": self.model.kind.value,
                },
            )
            for n, (e_tx, e_c) in zip(relay_counts, points, strict=True)
        ]


@dataclass
class OptimalNetworkExperiment(BaseExperiment):
    """最优中继数与最小归一化总能量（δ_t 取计算最优值）"""

    name: ClassVar[str] = "fig6"
    columns: ClassVar[tuple[str, ...]] = (
        "eta1_db", "r_ref", "model", "network", "best_n", "e_sum_norm", "delta_t",
        "e_tx_norm", "e_c_norm", "eta", "relaying_beneficial", "clipped_in_paper",
        "alpha", "sigma2", "n_max",
    )

    eta1_db_values: tuple[float, ...] = (0.0, -10.0, -20.0)
    r_values: tuple[float, ...] = field(default_factory=rate_grid)
    models: tuple[ComplexityKind, ...] = (ComplexityKind.EXPONENTIAL, ComplexityKind.LINEAR)
    network_kinds: tuple[NetworkKind, ...] = (NetworkKind.WIRELESS, NetworkKind.FIXED)
    n_max: int = 64
    alpha: float = 3.0
    sigma2: float = 1.0
    snr_gap_db: float = 5.0

    def __post_init__(self) -> None:
        if self.n_max < 0:
            raise DomainError(f"n_max 必须 ≥ 0，实际为 {self.n_max}")

    def _cells(self) -> Iterable[Cell]:
        return product(
            set(self.eta1_db_values),
            set(self.r_values),
            {m.value for m in self.models},
            {k.value for k in self.network_kinds},
        )

    def _evaluate_cell(self, cell: Cell) -> list[SweepRecord]:
        eta1_db, r_ref, model_kind, kind = cell
        scenario = Scenario(
            alpha=self.alpha,
            sigma2=self.sigma2,
            eta1=db_to_linear(eta1_db),
            model=_model_for(ComplexityKind(model_kind), self.snr_gap_db),
            network_kind=NetworkKind(kind),
        )
        result = NetworkOptimizer(scenario).best_relay_count(r_ref, self.n_max)
        best = result.breakdown
        return [
            SweepRecord(
                scenario_id=self.name,
                variable="r_ref",
                value=r_ref,
                outputs={
                    "best_n": result.best_n,
                    "e_sum_norm": best.e_sum_norm,
                    "delta_t": best.delta_t,
                    "e_tx_norm": best.e_tx_norm,
                    "e_c_norm": best.e_c_norm,
                    "eta": best.eta,
                    "relaying_beneficial": result.best_n > 0,
                    "clipped_in_paper": self._clipped(best.e_sum_norm),
                },
                parameters={"eta1_db": eta1_db, **scenario.echo(), "n_max": self.n_max},
            )
        ]


@dataclass
class ComplexityComparisonExperiment(BaseExperiment):
    """指数复杂度与线性复杂度的最小总能量对比"""

    name: ClassVar[str] = "complexity"
    columns: ClassVar[tuple[str, ...]] = (
        "eta1_db", "r_ref", "network", "exp_best_n", "exp_e_sum_norm",
        "linear_best_n", "linear_e_sum_norm", "preferred", "alpha", "sigma2", "snr_gap_db",
    )

    eta1_db_values: tuple[float, ...] = (0.0, -10.0, -20.0)
    r_values: tuple[float, ...] = field(default_factory=rate_grid)
    network_kinds: tuple[NetworkKind, ...] = (NetworkKind.WIRELESS,)
    n_max: int = 64
    alpha: float = 3.0
    sigma2: float = 1.0
    snr_gap_db: float = 5.0

    def _cells(self) -> Iterable[Cell]:
        return product(
            set(self.eta1_db_values), set(self.r_values), {k.value for k in self.network_kinds}
        )

    def _evaluate_cell(self, cell: Cell) -> list[SweepRecord]:
        eta1_db, r_ref, kind = cell
        results = {}
        for model_kind in ComplexityKind:
            scenario = Scenario(
                alpha=self.alpha,
                sigma2=self.sigma2,
                eta1=db_to_linear(eta1_db),
                model=_model_for(model_kind, self.snr_gap_db),
                network_kind=NetworkKind(kind),
            )
            results[model_kind] = NetworkOptimizer(scenario).best_relay_count(r_ref, self.n_max)

        exp_result = results[ComplexityKind.EXPONENTIAL]
        lin_result = results[ComplexityKind.LINEAR]
        preferred = (
            ComplexityKind.LINEAR
            if lin_result.breakdown.e_sum_norm < exp_result.breakdown.e_sum_norm
            else ComplexityKind.EXPONENTIAL
        )
        return [
            SweepRecord(
                scenario_id=self.name,
                variable="r_ref",
                value=r_ref,
                outputs={
                    "exp_best_n": exp_result.best_n,
                    "exp_e_sum_norm": exp_result.breakdown.e_sum_norm,
                    "linear_best_n": lin_result.best_n,
                    "linear_e_sum_norm": lin_result.breakdown.e_sum_norm,
                    "preferred": preferred.value,
                },
                parameters={
                    "eta1_db": eta1_db,
                    "network": kind,
                    "alpha": self.alpha,
                    "sigma2": self.sigma2,
                    "snr_gap_db": self.snr_gap_db,
                },
            )
        ]

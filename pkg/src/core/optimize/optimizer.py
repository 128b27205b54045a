"""
突发因子与中继数的优化器
"""

import math
from dataclasses import dataclass

import numpy as np
from loguru import logger

from ..energy.complexity import comp_optimal_delta
from ..energy.evaluator import EnergyEvaluator
from ..exceptions import DomainError, NumericalOverflowError
from ..models import (
    BurstFactor,
    BurstMode,
    ComplexityModel,
    EnergyBreakdown,
    NetworkKind,
    Objective,
    OptimizationResult,
    Scenario,
)
from .golden import golden_section_search


def optimal_burst_factor_comp(r_ref: float) -> BurstFactor:
    """T'_c,opt / T_ref = min(ln2·R_ref, 1)，与 N 无关"""
    return BurstFactor(comp_optimal_delta(r_ref))


def comp_opt_burst_factor(r_ref: float, model: ComplexityModel) -> BurstFactor:
    """按复杂度模型选取计算最优 δ_t（线性模型为 1）"""
    return BurstFactor(comp_optimal_delta(r_ref, model))


def delta_grid(grid_step: float) -> np.ndarray:
    """{step, 2·step, …, 1}，末点固定为 1"""
    if not 0 < grid_step <= 0.01:
        raise DomainError(f"网格步长必须位于 (0, 0.01]，实际为 {grid_step}")
    count = math.floor(1.0 / grid_step + 1e-9)
    grid = grid_step * np.arange(1, count + 1, dtype=float)
    if grid[-1] < 1.0 - 1e-12:
        return np.append(grid, 1.0)
    grid[-1] = 1.0
    return grid


@dataclass(frozen=True)
class NetworkOptimizer:
    """在给定场景下搜索最优 δ_t 与最优 N"""

    scenario: Scenario
    tolerance: float = 1e-6

    @property
    def evaluator(self) -> EnergyEvaluator:
        return EnergyEvaluator(self.scenario)

    def best_delta_sum(self, n: int, r_ref: float) -> float:
        """在 [T'_c,opt/T_ref, 1] 上黄金分割搜索总能量最小的 δ_t"""
        evaluator = self.evaluator
        lower = comp_optimal_delta(r_ref, self.scenario.model)
        if lower >= 1.0:
            return 1.0

        def objective(delta_t: float) -> float:
            return evaluator.evaluate(n, delta_t, r_ref).e_sum_norm

        x, fx = golden_section_search(objective, lower, 1.0, self.tolerance)
        # 单调情形下最优点落在端点上
        candidates = [(fx, x), (objective(lower), lower), (objective(1.0), 1.0)]
        best_value, best_delta = min(candidates)
        logger.debug(f"N={n} R={r_ref:g}: 总能量最优 δ_t={best_delta:.6g} (e_sum={best_value:.6g})")
        return best_delta

    def best_delta_grid(
        self, n: int, r_ref: float, grid_step: float, objective: Objective = Objective.SUM
    ) -> float:
        """穷举网格求 δ_t 的 argmin；溢出的网格点视为 +inf"""
        grid = delta_grid(grid_step)
        values = np.full(grid.shape, np.inf)
        evaluator = self.evaluator
        for i, delta_t in enumerate(grid):
            try:
                values[i] = evaluator.objective(n, float(delta_t), r_ref, objective)
            except NumericalOverflowError:
                continue
        return float(grid[int(np.argmin(values))])

    def choose_delta(self, n: int, r_ref: float, burst_mode: BurstMode) -> float:
        match burst_mode:
            case BurstMode.COMP_OPT:
                return comp_optimal_delta(r_ref, self.scenario.model)
            case BurstMode.SUM_OPT:
                return self.best_delta_sum(n, r_ref)

    def relay_count_profile(
        self, r_ref: float, n_max: int, burst_mode: BurstMode = BurstMode.COMP_OPT
    ) -> list[EnergyBreakdown]:
        """N = 0…n_max 的能量分解曲线"""
        if n_max < 0:
            raise DomainError(f"n_max 必须 ≥ 0，实际为 {n_max}")
        evaluator = self.evaluator
        return [
            evaluator.evaluate(n, self.choose_delta(n, r_ref, burst_mode), r_ref)
            for n in range(n_max + 1)
        ]

    def best_relay_count(
        self, r_ref: float, n_max: int, burst_mode: BurstMode = BurstMode.COMP_OPT
    ) -> OptimizationResult:
        """穷举 N ∈ [0, n_max]，总能量相同时取较小的 N"""
        profile = self.relay_count_profile(r_ref, n_max, burst_mode)
        best = profile[0]
        for breakdown in profile[1:]:
            if breakdown.e_sum_norm < best.e_sum_norm:
                best = breakdown
        logger.debug(
            f"R={r_ref:g} η1={self.scenario.eta1:g} {self.scenario.model.describe()} "
            f"{self.scenario.network_kind}: N*={best.relay_count}, e_sum={best.e_sum_norm:.6g}"
        )
        return OptimizationResult(
            best_n=best.relay_count,
            best_delta_t=best.delta_t,
            breakdown=best,
            candidates_examined=len(profile),
            profile=tuple(profile),
        )


# ============ 兼容函数接口 ============


def _scenario(
    alpha: float,
    sigma2: float,
    eta1: float,
    model: ComplexityModel,
    network_kind: NetworkKind,
) -> Scenario:
    return Scenario(alpha=alpha, sigma2=sigma2, eta1=eta1, model=model, network_kind=network_kind)


def optimal_burst_factor_sum(
    n: int,
    r_ref: float,
    alpha: float,
    sigma2: float,
    eta1: float,
    model: ComplexityModel,
    network_kind: NetworkKind,
    tolerance: float = 1e-6,
) -> BurstFactor:
    scenario = _scenario(alpha, sigma2, eta1, model, network_kind)
    return BurstFactor(NetworkOptimizer(scenario, tolerance).best_delta_sum(n, r_ref))


def brute_force_delta_oracle(
    n: int,
    r_ref: float,
    alpha: float,
    sigma2: float,
    eta1: float,
    model: ComplexityModel,
    network_kind: NetworkKind,
    grid_step: float = 1e-4,
    objective: Objective = Objective.SUM,
) -> BurstFactor:
    """网格穷举的测试基准，用于校验黄金分割搜索与 T'_c,opt 闭式解"""
    scenario = _scenario(alpha, sigma2, eta1, model, network_kind)
    return BurstFactor(NetworkOptimizer(scenario).best_delta_grid(n, r_ref, grid_step, objective))


def optimal_relay_count(
    r_ref: float,
    alpha: float,
    sigma2: float,
    eta1: float,
    model: ComplexityModel,
    network_kind: NetworkKind,
    n_max: int = 64,
    burst_mode: BurstMode = BurstMode.COMP_OPT,
) -> OptimizationResult:
    scenario = _scenario(alpha, sigma2, eta1, model, network_kind)
    return NetworkOptimizer(scenario).best_relay_count(r_ref, n_max, burst_mode)

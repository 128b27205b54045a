"""
归一化总能量评估
组合发射能量、计算能量与 η_ref，得到 EnergyBreakdown
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from loguru import logger

from ..exceptions import DomainError
from ..models import (
    ComplexityModel,
    EnergyBreakdown,
    NetworkKind,
    Objective,
    PowerAllocation,
    ReferenceSystem,
    Scenario,
)
from ..network.power_alloc import recursive_allocation
from .bursty import e_tx_norm_exact, e_tx_norm_fixed
from .complexity import e_c_norm, eta_ref


def e_sum_norm(e_c_norm: float, e_tx_norm: float, eta: float) -> float:
    """(E_c,norm·η + E_tx,norm) / (1 + η)"""
    if e_c_norm < 0 or e_tx_norm < 0 or eta < 0:
        raise DomainError(f"能量与 η 必须非负: e_c={e_c_norm}, e_tx={e_tx_norm}, η={eta}")
    if not math.isfinite(eta):
        raise DomainError("η 必须为有限值")
    return (e_c_norm * eta + e_tx_norm) / (1.0 + eta)


def energy_savings(breakdown: EnergyBreakdown) -> float:
    """相对单跳参考系统节省的能量比例（为正表示多跳更省）"""
    return 1.0 - breakdown.e_sum_norm


@lru_cache(maxsize=4096)
def _cached_allocation(n: int, alpha: float, p_ref: float) -> PowerAllocation:
    return recursive_allocation(n, alpha, p_ref)


@dataclass(frozen=True)
class EnergyEvaluator:
    """给定场景下按 (N, δ_t, R_ref) 评估能量分解"""

    scenario: Scenario

    def evaluate(self, n: int, delta_t: float, r_ref: float) -> EnergyBreakdown:
        reference = ReferenceSystem.from_rate(r_ref, self.scenario.sigma2)
        e_tx = self.transmission_energy(n, delta_t, reference)
        e_c = e_c_norm(n, delta_t, r_ref, self.scenario.model)
        eta = eta_ref(r_ref, self.scenario.eta1, self.scenario.model)
        breakdown = EnergyBreakdown(
            e_tx_norm=e_tx,
            e_c_norm=e_c,
            e_sum_norm=e_sum_norm(e_c, e_tx, eta),
            delta_t=delta_t,
            relay_count=n,
            eta=eta,
            reference_rate=r_ref,
        )
        logger.debug(
            f"N={n} δ_t={delta_t:.6g} R={r_ref:g}: "
            f"e_tx={e_tx:.6g} e_c={e_c:.6g} e_sum={breakdown.e_sum_norm:.6g}"
        )
        return breakdown

    def transmission_energy(self, n: int, delta_t: float, reference: ReferenceSystem) -> float:
        """多跳发射能量；线性复杂度额外乘以 SNR gap 因子"""
        scenario = self.scenario
        p_ref = reference.reference_power
        match scenario.network_kind:
            case NetworkKind.WIRELESS:
                alloc = _cached_allocation(n, scenario.alpha, p_ref)
                e_tx = e_tx_norm_exact(alloc, delta_t, p_ref, scenario.sigma2)
            case NetworkKind.FIXED:
                e_tx = e_tx_norm_fixed(n, scenario.alpha, delta_t, p_ref, scenario.sigma2)
        return e_tx * scenario.model.gap_factor

    def objective(self, n: int, delta_t: float, r_ref: float, objective: Objective) -> float:
        """δ_t 搜索使用的目标值"""
        if objective == Objective.COMPUTATION:
            return e_c_norm(n, delta_t, r_ref, self.scenario.model)
        return self.evaluate(n, delta_t, r_ref).e_sum_norm


def evaluate_breakdown(
    n: int,
    delta_t: float,
    r_ref: float,
    alpha: float,
    sigma2: float,
    eta1: float,
    model: ComplexityModel,
    network_kind: NetworkKind,
) -> EnergyBreakdown:
    """评估单个参数点的能量分解（兼容函数接口）"""
    scenario = Scenario(
        alpha=alpha, sigma2=sigma2, eta1=eta1, model=model, network_kind=network_kind
    )
    return EnergyEvaluator(scenario).evaluate(n, delta_t, r_ref)

"""
功率分配
协作 DF 的精确递推分配（无线网络）与等功率分配（固定网络）
"""

from dataclasses import dataclass

import numpy as np
from loguru import logger

from ..exceptions import DomainError, NumericalError
from ..models import AllocationKind, PowerAllocation


def _check_parameters(n: int, alpha: float, p_ref: float) -> None:
    if n < 0:
        raise DomainError(f"中继数必须 ≥ 0，实际为 {n}")
    if not alpha > 0:
        raise DomainError(f"路径损耗指数必须 > 0，实际为 {alpha}")
    if not p_ref > 0:
        raise DomainError(f"参考功率必须 > 0，实际为 {p_ref}")


def source_power(n: int, alpha: float, p_ref: float) -> float:
    """P_tx,0 = (N+1)^(−α) · P_ref"""
    _check_parameters(n, alpha, p_ref)
    return (n + 1) ** (-alpha) * p_ref


@dataclass(frozen=True)
class RecursivePowerAllocator:
    """逐节点递推：每一跳的累积接收功率都等于第一跳"""

    alpha: float

    def extend(self, first_power: float, count: int) -> list[float]:
        """从 P_tx,0 出发递推 count 个节点的功率"""
        powers: list[float] = []
        for n in range(count):
            if n == 0:
                powers.append(first_power)
                continue
            weights = (n + 1 - np.arange(n)) ** (-self.alpha)
            value = first_power - float(np.dot(weights, powers))
            if value < 0:
                raise NumericalError(f"递推在节点 {n} 得到负功率 {value}")
            powers.append(value)
        return powers

    def allocate(self, n: int, p_ref: float) -> PowerAllocation:
        p0 = source_power(n, self.alpha, p_ref)
        powers = self.extend(p0, n + 1)
        logger.debug(f"递推功率分配 N={n}, α={self.alpha}: P0={p0:.6g}, P_N={powers[-1]:.6g}")
        return PowerAllocation(powers=tuple(powers), kind=AllocationKind.RECURSIVE)


def recursive_allocation(n: int, alpha: float, p_ref: float) -> PowerAllocation:
    """P_tx,n = P_tx,0 − Σ_{k<n} (n+1−k)^(−α) P_tx,k"""
    return RecursivePowerAllocator(alpha).allocate(n, p_ref)


def equal_allocation(n: int, alpha: float, p_ref: float) -> PowerAllocation:
    """所有节点都使用源节点功率（可达但次优）"""
    p0 = source_power(n, alpha, p_ref)
    return PowerAllocation(powers=(p0,) * (n + 1), kind=AllocationKind.EQUAL)

"""
突发传输下的发射功率与归一化发射能量
所有 (1+x)^(1/δ_t) 形式都在对数域中计算：exp(log1p(x)/δ_t)
"""

import math

import numpy as np

from ..exceptions import DomainError, NumericalOverflowError
from ..models import PowerAllocation
from ..network.power_alloc import source_power


def check_delta_t(delta_t: float) -> None:
    if not (0.0 < delta_t <= 1.0):
        raise DomainError(f"δ_t 必须位于 (0, 1]，实际为 {delta_t}")


def burst_expansion(snr: np.ndarray | float, delta_t: float) -> np.ndarray:
    """(1 + snr)^(1/δ_t) − 1，溢出时抛出 NumericalOverflowError"""
    check_delta_t(delta_t)
    snr = np.asarray(snr, dtype=float)
    if delta_t == 1.0:
        return snr.copy()
    try:
        with np.errstate(over="raise", invalid="raise"):
            return np.expm1(np.log1p(snr) / delta_t)
    except FloatingPointError as e:
        raise NumericalOverflowError(f"突发功率在 δ_t={delta_t:g} 处超出浮点范围") from e


def bursty_power(power: float, sigma2: float, delta_t: float) -> float:
    """P' = σ²((1 + P/σ²)^(1/δ_t) − 1)，使 δ_t·C(P'/σ²) = C(P/σ²)"""
    if not (power >= 0 and math.isfinite(power)):
        raise DomainError(f"功率必须为非负有限值，实际为 {power}")
    if not (sigma2 > 0 and math.isfinite(sigma2)):
        raise DomainError(f"噪声功率必须为正有限值，实际为 {sigma2}")
    return sigma2 * float(burst_expansion(power / sigma2, delta_t))


def _require_finite(value: float, delta_t: float) -> float:
    if not math.isfinite(value):
        raise NumericalOverflowError(f"发射能量在 δ_t={delta_t:g} 处超出浮点范围")
    return value


def e_tx_norm_exact(
    alloc: PowerAllocation, delta_t: float, p_ref: float, sigma2: float = 1.0
) -> float:
    """δ_t · Σ_n P'_tx,n / P_ref（无线网络的精确分配）"""
    if not p_ref > 0:
        raise DomainError(f"参考功率必须 > 0，实际为 {p_ref}")
    try:
        with np.errstate(over="raise"):
            expanded = sigma2 * burst_expansion(alloc.as_array() / sigma2, delta_t)
            total = float(np.sum(expanded))
    except FloatingPointError as e:
        raise NumericalOverflowError(f"发射功率之和在 δ_t={delta_t:g} 处超出浮点范围") from e
    return _require_finite(delta_t * total / p_ref, delta_t)


def e_tx_norm_fixed(
    n: int, alpha: float, delta_t: float, p_ref: float, sigma2: float = 1.0
) -> float:
    """δ_t · (N+1)^(1−α) · σ²((1 + P_tx,0/σ²)^(1/δ_t) − 1) / P_tx,0（固定网络闭式解）"""
    p0 = source_power(n, alpha, p_ref)
    expanded = sigma2 * float(burst_expansion(p0 / sigma2, delta_t))
    return _require_finite(delta_t * (n + 1) ** (1.0 - alpha) * expanded / p0, delta_t)

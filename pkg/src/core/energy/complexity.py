"""
计算能量模型
指数复杂度（类 trellis 译码）与线性复杂度（未编码传输）
"""

import math

import numpy as np

from ..exceptions import DomainError, NumericalOverflowError
from ..models import ComplexityModel
from .bursty import check_delta_t

LN2 = math.log(2.0)
# exp() 的安全上界
_MAX_LOG = math.log(np.finfo(float).max)


def _exp_checked(log_value: float, what: str) -> float:
    if log_value > _MAX_LOG:
        raise NumericalOverflowError(f"{what} 超出浮点范围 (log 值 {log_value:.4g})")
    return math.exp(log_value)


def e_c_norm(n: int, delta_t: float, r_ref: float, model: ComplexityModel) -> float:
    """归一化计算能量

    指数模型: δ_t·(N+1)·c3^(c2·R_ref·(1/δ_t − 1))
    线性模型: 速率比与 δ_t 相消，恒为 N+1
    """
    if n < 0:
        raise DomainError(f"中继数必须 ≥ 0，实际为 {n}")
    if not (r_ref > 0 and math.isfinite(r_ref)):
        raise DomainError(f"参考速率必须为正有限值，实际为 {r_ref}")
    check_delta_t(delta_t)

    if model.is_linear:
        return float(n + 1)
    log_value = (
        math.log(delta_t)
        + math.log(n + 1)
        + model.c2 * r_ref * (1.0 / delta_t - 1.0) * math.log(model.c3)
    )
    return _exp_checked(log_value, "计算能量")


def eta_ref(r_ref: float, eta1: float, model: ComplexityModel) -> float:
    """参考系统中计算能量与发射能量之比 η_ref(R_ref)

    以 η_ref(1) = eta1 为锚点；参考系统在速率 R 下占满 T_ref:
      指数模型: η1·c3^(c2(R−1)) / (2^R − 1)
      线性模型: η1·R / (2^R − 1)
    """
    if not (r_ref > 0 and math.isfinite(r_ref)):
        raise DomainError(f"η_ref 仅在 R_ref > 0 时有定义，实际为 {r_ref}")
    if not (eta1 >= 0 and math.isfinite(eta1)):
        raise DomainError(f"η_ref(1) 必须为非负有限值，实际为 {eta1}")
    if eta1 == 0:
        return 0.0

    tx_energy_log = math.log(math.expm1(r_ref * LN2)) if r_ref < 700 else r_ref * LN2
    if model.is_linear:
        log_value = math.log(eta1) + math.log(r_ref) - tx_energy_log
    else:
        log_value = math.log(eta1) + model.c2 * (r_ref - 1.0) * math.log(model.c3) - tx_energy_log
    return _exp_checked(log_value, "η_ref")


def comp_optimal_delta(r_ref: float, model: ComplexityModel | None = None) -> float:
    """使计算能量最小的 δ_t

    指数模型的驻点为 c2·R_ref·ln(c3)（默认参数下即 ln2·R_ref），截断到 1；
    线性模型计算能量与 δ_t 无关，取整个时隙 δ_t = 1。
    """
    if not (r_ref > 0 and math.isfinite(r_ref)):
        raise DomainError(f"参考速率必须为正有限值，实际为 {r_ref}")
    model = model or ComplexityModel.exponential()
    if model.is_linear:
        return 1.0
    return min(model.c2 * r_ref * math.log(model.c3), 1.0)

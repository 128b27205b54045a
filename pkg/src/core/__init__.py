"""
Core 模块
"""

from .config import Settings, get_settings
from .energy import (
    EnergyEvaluator,
    bursty_power,
    e_c_norm,
    e_sum_norm,
    e_tx_norm_exact,
    e_tx_norm_fixed,
    energy_savings,
    eta_ref,
    evaluate_breakdown,
)
from .exceptions import (
    DomainError,
    MultihopError,
    NumericalError,
    NumericalOverflowError,
    SingularityError,
)
from .models import (
    BurstFactor,
    BurstMode,
    ComplexityKind,
    ComplexityModel,
    EnergyBreakdown,
    NetworkKind,
    NetworkTopology,
    Objective,
    OptimizationResult,
    PowerAllocation,
    RecordTable,
    ReferenceSystem,
    Scenario,
    SweepRecord,
)
from .network import (
    capacity,
    channel_power_gain,
    df_end_to_end_rate,
    equal_allocation,
    inverse_capacity,
    node_distance,
    recursive_allocation,
    source_power,
)
from .optimize import (
    NetworkOptimizer,
    brute_force_delta_oracle,
    optimal_burst_factor_comp,
    optimal_burst_factor_sum,
    optimal_relay_count,
    tradeoff_curve,
)

__all__ = [
    # 配置
    "Settings",
    "get_settings",
    # 异常
    "DomainError",
    "MultihopError",
    "NumericalError",
    "NumericalOverflowError",
    "SingularityError",
    # 数据模型
    "BurstFactor",
    "BurstMode",
    "ComplexityKind",
    "ComplexityModel",
    "EnergyBreakdown",
    "NetworkKind",
    "NetworkTopology",
    "Objective",
    "OptimizationResult",
    "PowerAllocation",
    "RecordTable",
    "ReferenceSystem",
    "Scenario",
    "SweepRecord",
    # 评估器与优化器
    "EnergyEvaluator",
    "NetworkOptimizer",
    # 函数
    "brute_force_delta_oracle",
    "bursty_power",
    "capacity",
    "channel_power_gain",
    "df_end_to_end_rate",
    "e_c_norm",
    "e_sum_norm",
    "e_tx_norm_exact",
    "e_tx_norm_fixed",
    "energy_savings",
    "equal_allocation",
    "eta_ref",
    "evaluate_breakdown",
    "inverse_capacity",
    "node_distance",
    "optimal_burst_factor_comp",
    "optimal_burst_factor_sum",
    "optimal_relay_count",
    "recursive_allocation",
    "source_power",
    "tradeoff_curve",
]

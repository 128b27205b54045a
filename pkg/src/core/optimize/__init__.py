"""
优化器：最优突发因子、最优中继数与权衡曲线
"""

from .golden import golden_section_search
from .optimizer import (
    NetworkOptimizer,
    brute_force_delta_oracle,
    comp_opt_burst_factor,
    delta_grid,
    optimal_burst_factor_comp,
    optimal_burst_factor_sum,
    optimal_relay_count,
)
from .tradeoff import tradeoff_curve

__all__ = [
    "NetworkOptimizer",
    "brute_force_delta_oracle",
    "comp_opt_burst_factor",
    "delta_grid",
    "golden_section_search",
    "optimal_burst_factor_comp",
    "optimal_burst_factor_sum",
    "optimal_relay_count",
    "tradeoff_curve",
]

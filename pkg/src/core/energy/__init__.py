"""
能量模型：突发功率、发射/计算能量、η_ref 与总能量
"""

from .bursty import bursty_power, e_tx_norm_exact, e_tx_norm_fixed
from .complexity import comp_optimal_delta, e_c_norm, eta_ref
from .evaluator import EnergyEvaluator, e_sum_norm, energy_savings, evaluate_breakdown

__all__ = [
    "EnergyEvaluator",
    "bursty_power",
    "comp_optimal_delta",
    "e_c_norm",
    "e_sum_norm",
    "e_tx_norm_exact",
    "e_tx_norm_fixed",
    "energy_savings",
    "eta_ref",
    "evaluate_breakdown",
]

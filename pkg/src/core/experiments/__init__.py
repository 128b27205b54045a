"""
图表复现实验模块
"""

from .base_experiment import BaseExperiment
from .figures import (
    ComplexityComparisonExperiment,
    EnergyCurveExperiment,
    OptimalNetworkExperiment,
    PowerAssignmentExperiment,
    TradeoffExperiment,
    line_grid,
    rate_grid,
)
from .pipeline import (
    ReproducePipeline,
    compare_complexity,
    reproduce_fig2,
    reproduce_fig3_fig4,
    reproduce_fig5,
    reproduce_fig6,
)

__all__ = [
    # 类
    "BaseExperiment",
    "ComplexityComparisonExperiment",
    "EnergyCurveExperiment",
    "OptimalNetworkExperiment",
    "PowerAssignmentExperiment",
    "ReproducePipeline",
    "TradeoffExperiment",
    # 兼容函数
    "compare_complexity",
    "line_grid",
    "rate_grid",
    "reproduce_fig2",
    "reproduce_fig3_fig4",
    "reproduce_fig5",
    "reproduce_fig6",
]

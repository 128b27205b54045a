"""
图表复现流水线
按图表名称创建实验并汇总结果
"""

from collections.abc import Iterable
from dataclasses import dataclass

from loguru import logger

from ..config import get_settings
from ..models import ComplexityKind, Figure, NetworkKind, RecordTable
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


@dataclass
class ReproducePipeline:
    """统一复现流水线"""

    alpha: float = 3.0
    sigma2: float = 1.0
    p_ref: float = 1.0
    r_ref: float = 1.0
    n_max: int = 64
    snr_gap_db: float = 5.0
    divisor: int = 5

    def run(self, figure: Figure) -> dict[str, RecordTable]:
        """执行一个或全部图表的复现"""
        figures = self._expand(figure)
        logger.info(f"📌 待复现: {', '.join(figures)}")

        tables: dict[str, RecordTable] = {}
        for item in figures:
            experiment = self._create_experiment(item)
            if experiment.name in tables:
                continue
            tables[experiment.name] = experiment.run()
        return tables

    def _expand(self, figure: Figure) -> list[Figure]:
        if figure == Figure.ALL:
            return [f for f in Figure if f != Figure.ALL]
        return [figure]

    def _create_experiment(self, figure: Figure) -> BaseExperiment:
        """创建对应图表的实验"""
        settings = get_settings()
        match figure:
            case Figure.FIG2:
                return PowerAssignmentExperiment(divisor=self.divisor, p_ref=self.p_ref)
            case Figure.FIG3 | Figure.FIG4:
                return EnergyCurveExperiment(
                    r_ref=self.r_ref,
                    alpha=self.alpha,
                    sigma2=self.sigma2,
                    deltas=line_grid(settings.line_grid_start, settings.line_grid_step),
                    marker_step=settings.marker_grid_step,
                )
            case Figure.FIG5:
                return TradeoffExperiment(alpha=self.alpha, sigma2=self.sigma2)
            case Figure.FIG6:
                return OptimalNetworkExperiment(
                    r_values=rate_grid(low_rate=settings.low_rate_substitute),
                    n_max=self.n_max,
                    alpha=self.alpha,
                    sigma2=self.sigma2,
                    snr_gap_db=self.snr_gap_db,
                )
            case Figure.COMPLEXITY:
                return ComplexityComparisonExperiment(
                    r_values=rate_grid(low_rate=settings.low_rate_substitute),
                    n_max=self.n_max,
                    alpha=self.alpha,
                    sigma2=self.sigma2,
                    snr_gap_db=self.snr_gap_db,
                )
            case Figure.ALL:
                raise ValueError("Figure.ALL 需先展开")


# ============ 兼容函数接口 ============


def reproduce_fig2(
    alphas: Iterable[float] = (3.0, 4.0, 5.0), divisor: int = 5, p_ref: float = 1.0
) -> RecordTable:
    return PowerAssignmentExperiment(alphas=tuple(alphas), divisor=divisor, p_ref=p_ref).run()


def reproduce_fig3_fig4(
    relay_counts: Iterable[int] = (0, 1, 2),
    r_ref: float = 1.0,
    alpha: float = 3.0,
    deltas: Iterable[float] | None = None,
    marker_step: float = 0.05,
) -> RecordTable:
    return EnergyCurveExperiment(
        relay_counts=tuple(relay_counts),
        r_ref=r_ref,
        alpha=alpha,
        deltas=tuple(deltas) if deltas is not None else line_grid(),
        marker_step=marker_step,
    ).run()


def reproduce_fig5(
    r_values: Iterable[float] = (0.1, 2.0),
    relay_counts: Iterable[int] = range(1, 31),
    alpha: float = 3.0,
) -> RecordTable:
    return TradeoffExperiment(
        r_values=tuple(r_values), relay_counts=tuple(relay_counts), alpha=alpha
    ).run()


def reproduce_fig6(
    eta1_db_values: Iterable[float] = (0.0, -10.0, -20.0),
    r_values: Iterable[float] | None = None,
    models: Iterable[ComplexityKind] = (ComplexityKind.EXPONENTIAL, ComplexityKind.LINEAR),
    network_kinds: Iterable[NetworkKind] = (NetworkKind.WIRELESS, NetworkKind.FIXED),
    n_max: int = 64,
) -> RecordTable:
    return OptimalNetworkExperiment(
        eta1_db_values=tuple(eta1_db_values),
        r_values=tuple(r_values) if r_values is not None else rate_grid(),
        models=tuple(models),
        network_kinds=tuple(network_kinds),
        n_max=n_max,
    ).run()


def compare_complexity(
    eta1_db_values: Iterable[float] = (0.0, -10.0, -20.0),
    r_values: Iterable[float] | None = None,
    network_kind: NetworkKind = NetworkKind.WIRELESS,
    n_max: int = 64,
) -> RecordTable:
    return ComplexityComparisonExperiment(
        eta1_db_values=tuple(eta1_db_values),
        r_values=tuple(r_values) if r_values is not None else rate_grid(),
        network_kinds=(network_kind,),
        n_max=n_max,
    ).run()

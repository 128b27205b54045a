"""
参数扫描实验抽象基类
提供所有图表复现流水线的共享逻辑
"""

from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import ClassVar

from loguru import logger

from ..exceptions import NumericalOverflowError
from ..models import RecordTable, Scalar, SweepRecord

# 绘图纵轴的截断上限
PLOT_CEILING = 11.0

type Cell = tuple[Scalar, ...]


@dataclass
class BaseExperiment(ABC):
    """参数扫描实验抽象基类"""

    name: ClassVar[str]
    columns: ClassVar[tuple[str, ...]]

    # ===== 模板方法 =====
    def run(self) -> RecordTable:
        """执行扫描（模板方法）：按排序后的参数元组依次评估"""
        cells = sorted(self._cells())
        self._log_start(len(cells))

        records: list[SweepRecord] = []
        for cell in cells:
            records.extend(self._evaluate_cell(cell))

        self._log_completion(records)
        return RecordTable(name=self.name, columns=self.columns, records=records)

    def _log_start(self, cell_count: int) -> None:
        logger.info("=" * 50)
        logger.info(f"🚀 开始复现 {self.name}: {cell_count} 个参数组合")
        logger.info("=" * 50)

    def _log_completion(self, records: list[SweepRecord]) -> None:
        overflow = sum(1 for r in records if r.outputs.get("overflow"))
        logger.info(f"🎉 {self.name} 完成：{len(records)} 条记录")
        if overflow:
            logger.warning(f"有 {overflow} 条记录数值溢出，已标记 overflow")

    # ===== 共享实现 =====
    @staticmethod
    def _guarded(compute: Callable[[], float]) -> tuple[float | None, bool]:
        """计算单个值；溢出时返回 (None, True) 而不中断扫描"""
        try:
            return compute(), False
        except NumericalOverflowError as e:
            logger.debug(f"溢出: {e}")
            return None, True

    @staticmethod
    def _clipped(*values: float | None) -> bool:
        return any(v is not None and v > PLOT_CEILING for v in values)

    # ===== 抽象方法（子类实现）=====
    @abstractmethod
    def _cells(self) -> Iterable[Cell]:
        """返回所有参数组合"""
        ...

    @abstractmethod
    def _evaluate_cell(self, cell: Cell) -> list[SweepRecord]:
        """评估单个参数组合"""
        ...

"""
数据模型定义模块
包含枚举、dataclass 和 Pydantic 模型
"""

import math
from dataclasses import dataclass, field
from enum import StrEnum
from pathlib import Path

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from .exceptions import DomainError, NumericalOverflowError

# 类型别名
type Scalar = float | int | bool | str | None

# ============ 枚举定义 ============


class ComplexityKind(StrEnum):
    """译码复杂度模型"""

    EXPONENTIAL = "exp"
    LINEAR = "linear"


class NetworkKind(StrEnum):
    """网络类型：无线（协作分配）或固定（等功率闭式解）"""

    WIRELESS = "wireless"
    FIXED = "fixed"


class AllocationKind(StrEnum):
    """功率分配方式"""

    RECURSIVE = "recursive"
    EQUAL = "equal"


class BurstMode(StrEnum):
    """突发因子的选取方式"""

    COMP_OPT = "comp_opt"
    SUM_OPT = "sum_opt"


class Objective(StrEnum):
    """δ_t 搜索的目标函数"""

    SUM = "sum"
    COMPUTATION = "computation"


class OutputFormat(StrEnum):
    """输出格式枚举"""

    CSV = "csv"
    JSON = "json"


class Command(StrEnum):
    """CLI 子命令"""

    POWER_ASSIGN = "power-assign"
    ENERGY_SWEEP = "energy-sweep"
    TRADEOFF = "tradeoff"
    OPTIMIZE_N = "optimize-n"
    REPRODUCE = "reproduce"


class Figure(StrEnum):
    """可复现的图表"""

    FIG2 = "fig2"
    FIG3 = "fig3"
    FIG4 = "fig4"
    FIG5 = "fig5"
    FIG6 = "fig6"
    COMPLEXITY = "complexity"
    ALL = "all"


# ============ 内部数据模型 (dataclass) ============


@dataclass(frozen=True)
class NetworkTopology:
    """等间距直线多跳网络：源节点 0，中继 1…N，目的节点 N+1"""

    relay_count: int
    path_loss_exponent: float = 3.0
    noise_power: float = 1.0
    source_dest_distance: float = 1.0

    def __post_init__(self) -> None:
        if self.relay_count < 0:
            raise DomainError(f"relay_count 必须 ≥ 0，实际为 {self.relay_count}")
        if not self.path_loss_exponent > 0:
            raise DomainError(f"路径损耗指数必须 > 0，实际为 {self.path_loss_exponent}")
        if not self.noise_power > 0:
            raise DomainError(f"噪声功率必须 > 0，实际为 {self.noise_power}")
        if not self.source_dest_distance > 0:
            raise DomainError(f"源-目的距离必须 > 0，实际为 {self.source_dest_distance}")

    @property
    def destination(self) -> int:
        """目的节点索引 N+1"""
        return self.relay_count + 1


@dataclass(frozen=True)
class ReferenceSystem:
    """单跳参考系统（N=0）"""

    reference_power: float
    noise_power: float = 1.0
    slot_count: float = 1.0

    def __post_init__(self) -> None:
        if not (self.reference_power > 0 and math.isfinite(self.reference_power)):
            raise DomainError(f"参考功率必须为正有限值，实际为 {self.reference_power}")
        if not self.noise_power > 0:
            raise DomainError(f"噪声功率必须 > 0，实际为 {self.noise_power}")
        if not self.slot_count > 0:
            raise DomainError(f"时隙数必须 > 0，实际为 {self.slot_count}")

    @classmethod
    def from_power(
        cls, reference_power: float, noise_power: float = 1.0, slot_count: float = 1.0
    ) -> "ReferenceSystem":
        return cls(reference_power, noise_power, slot_count)

    @classmethod
    def from_rate(
        cls, reference_rate: float, noise_power: float = 1.0, slot_count: float = 1.0
    ) -> "ReferenceSystem":
        """由参考速率反推参考功率 P = σ²(2^R − 1)"""
        if not (reference_rate > 0 and math.isfinite(reference_rate)):
            raise DomainError(f"参考速率必须为正有限值，实际为 {reference_rate}")
        message = f"R_ref={reference_rate:g} 对应的参考功率超出浮点范围"
        try:
            with np.errstate(over="raise"):
                power = noise_power * float(np.expm1(reference_rate * np.log(2.0)))
        except FloatingPointError as e:
            raise NumericalOverflowError(message) from e
        if not math.isfinite(power):
            raise NumericalOverflowError(message)
        return cls(power, noise_power, slot_count)

    @property
    def reference_rate(self) -> float:
        """R_ref = log2(1 + P_ref/σ²)"""
        return float(np.log1p(self.reference_power / self.noise_power) / np.log(2.0))

    @property
    def payload_bits(self) -> float:
        return self.reference_rate * self.slot_count


@dataclass(frozen=True)
class PowerAllocation:
    """各节点发射功率 P_tx,0 … P_tx,N（线性值）"""

    powers: tuple[float, ...]
    kind: AllocationKind = AllocationKind.RECURSIVE

    def __post_init__(self) -> None:
        if not self.powers:
            raise DomainError("功率分配不能为空")
        for index, power in enumerate(self.powers):
            if not (power >= 0 and math.isfinite(power)):
                raise DomainError(f"节点 {index} 的功率非法: {power}")

    @property
    def relay_count(self) -> int:
        return len(self.powers) - 1

    @property
    def source_power(self) -> float:
        return self.powers[0]

    @property
    def total_power(self) -> float:
        return float(np.sum(self.as_array()))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.powers, dtype=float)


@dataclass(frozen=True)
class ComplexityModel:
    """计算复杂度模型：指数型 (c1, c2, c3) 或线性型（SNR gap）"""

    kind: ComplexityKind = ComplexityKind.EXPONENTIAL
    c1: float = 1.0
    c2: float = 1.0
    c3: float = 2.0
    snr_gap_db: float = 5.0

    def __post_init__(self) -> None:
        match self.kind:
            case ComplexityKind.EXPONENTIAL:
                if not (self.c1 > 0 and self.c2 > 0 and self.c3 > 1):
                    raise DomainError(
                        f"指数模型要求 c1 > 0, c2 > 0, c3 > 1，实际为 ({self.c1}, {self.c2}, {self.c3})"
                    )
            case ComplexityKind.LINEAR:
                if not self.snr_gap_db >= 0:
                    raise DomainError(f"SNR gap 必须 ≥ 0 dB，实际为 {self.snr_gap_db}")

    @classmethod
    def exponential(cls, c1: float = 1.0, c2: float = 1.0, c3: float = 2.0) -> "ComplexityModel":
        return cls(kind=ComplexityKind.EXPONENTIAL, c1=c1, c2=c2, c3=c3)

    @classmethod
    def linear(cls, snr_gap_db: float = 5.0) -> "ComplexityModel":
        return cls(kind=ComplexityKind.LINEAR, snr_gap_db=snr_gap_db)

    @property
    def is_linear(self) -> bool:
        return self.kind == ComplexityKind.LINEAR

    @property
    def gap_factor(self) -> float:
        """作用在多跳发射能量上的 SNR gap 线性因子（指数模型为 1）"""
        if self.is_linear:
            return 10.0 ** (self.snr_gap_db / 10.0)
        return 1.0

    def describe(self) -> str:
        if self.is_linear:
            return f"linear(gap={self.snr_gap_db:g}dB)"
        return f"exp(c1={self.c1:g},c2={self.c2:g},c3={self.c3:g})"


@dataclass(frozen=True)
class BurstFactor:
    """突发因子 δ_t = T'/T_ref ∈ (0, 1]"""

    delta_t: float

    def __post_init__(self) -> None:
        if not (0.0 < self.delta_t <= 1.0):
            raise DomainError(f"δ_t 必须位于 (0, 1]，实际为 {self.delta_t}")

    def __float__(self) -> float:
        return self.delta_t


@dataclass(frozen=True)
class Scenario:
    """一次评估所需的全部网络参数（η1 为线性值）"""

    alpha: float = 3.0
    sigma2: float = 1.0
    eta1: float = 1.0
    model: ComplexityModel = field(default_factory=ComplexityModel)
    network_kind: NetworkKind = NetworkKind.WIRELESS

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise DomainError(f"路径损耗指数必须 > 0，实际为 {self.alpha}")
        if not self.sigma2 > 0:
            raise DomainError(f"噪声功率必须 > 0，实际为 {self.sigma2}")
        if not (self.eta1 >= 0 and math.isfinite(self.eta1)):
            raise DomainError(f"η_ref(1) 必须为非负有限值，实际为 {self.eta1}")

    def echo(self) -> dict[str, Scalar]:
        """参数回显，保证每条记录都可独立复算"""
        return {
            "alpha": self.alpha,
            "sigma2": self.sigma2,
            "eta1": self.eta1,
            "model": self.model.kind.value,
            "snr_gap_db": self.model.snr_gap_db if self.model.is_linear else None,
            "network": self.network_kind.value,
        }


@dataclass(frozen=True)
class EnergyBreakdown:
    """归一化能量分解"""

    e_tx_norm: float
    e_c_norm: float
    e_sum_norm: float
    delta_t: float
    relay_count: int
    eta: float
    reference_rate: float | None = None

    def is_consistent(self, rel_tol: float = 1e-9) -> bool:
        """校验 e_sum = (e_c·η + e_tx)/(1 + η)"""
        if not math.isfinite(self.eta):
            return True
        expected = (self.e_c_norm * self.eta + self.e_tx_norm) / (1.0 + self.eta)
        return math.isclose(self.e_sum_norm, expected, rel_tol=rel_tol, abs_tol=1e-15)


@dataclass(frozen=True)
class OptimizationResult:
    """最优中继数搜索结果"""

    best_n: int
    best_delta_t: float
    breakdown: EnergyBreakdown
    candidates_examined: int
    profile: tuple[EnergyBreakdown, ...] = field(default=(), repr=False)


@dataclass
class SweepRecord:
    """参数扫描输出的一行记录"""

    scenario_id: str
    variable: str
    value: Scalar
    outputs: dict[str, Scalar] = field(default_factory=dict)
    parameters: dict[str, Scalar] = field(default_factory=dict)

    def flatten(self) -> dict[str, Scalar]:
        """合并为扁平字典（参数 → 自变量 → 输出）"""
        row: dict[str, Scalar] = {"scenario_id": self.scenario_id}
        row.update(self.parameters)
        row[self.variable] = self.value
        row.update(self.outputs)
        return row


@dataclass
class RecordTable:
    """一组记录及其固定列顺序（新列只允许追加在末尾）"""

    name: str
    columns: tuple[str, ...]
    records: list[SweepRecord] = field(default_factory=list)
    single: bool = False

    def rows(self) -> list[dict[str, Scalar]]:
        return [record.flatten() for record in self.records]


# ============ 外部输入验证模型 (Pydantic) ============


class CliConfig(BaseModel):
    """CLI 参数（外部输入验证）"""

    command: Command
    alpha: float = Field(default=3.0, gt=0.0)
    sigma2: float = Field(default=1.0, gt=0.0)
    pref: float | None = Field(default=None, gt=0.0)
    rref: float | None = Field(default=None, gt=0.0)
    eta1_db: float = Field(default=0.0, ge=-60.0, le=60.0)
    snr_gap_db: float = Field(default=5.0, ge=0.0, le=30.0)
    model: ComplexityKind = ComplexityKind.EXPONENTIAL
    network: NetworkKind = NetworkKind.WIRELESS
    nmax: int = Field(default=64, ge=0, le=1024)
    format: OutputFormat = OutputFormat.CSV
    out: Path | None = None

    # 子命令参数
    n: list[int] = Field(default_factory=lambda: [0])
    delta_t: list[float] = Field(default_factory=list)
    delta_start: float | None = Field(default=None, gt=0.0, le=1.0)
    delta_step: float | None = Field(default=None, gt=0.0, le=1.0)
    n_min: int = Field(default=1, ge=0)
    burst_mode: BurstMode = BurstMode.COMP_OPT
    figure: Figure = Figure.ALL
    divisor: int = Field(default=5, ge=1)

    @field_validator("n")
    @classmethod
    def check_relay_counts(cls, v: list[int]) -> list[int]:
        if any(count < 0 for count in v):
            raise ValueError("中继数必须 ≥ 0")
        return v

    @field_validator("delta_t")
    @classmethod
    def check_delta_t(cls, v: list[float]) -> list[float]:
        if any(not (0.0 < d <= 1.0) for d in v):
            raise ValueError("δ_t 必须位于 (0, 1]")
        return v

    @model_validator(mode="after")
    def check_reference(self) -> "CliConfig":
        if self.pref is not None and self.rref is not None:
            raise ValueError("--pref 与 --rref 只能指定其一")
        if self.n_min > self.nmax and self.command == Command.TRADEOFF:
            raise ValueError("--n-min 不能大于 --nmax")
        return self

    @property
    def eta1(self) -> float:
        """η_ref(1) 线性值（dB 只在此处转换）"""
        return 10.0 ** (self.eta1_db / 10.0)

    def to_reference(self, default_pref: float = 1.0) -> ReferenceSystem:
        """构建参考系统，缺省的一方由 capacity 或其反函数推出"""
        if self.rref is not None:
            return ReferenceSystem.from_rate(self.rref, self.sigma2)
        return ReferenceSystem.from_power(self.pref or default_pref, self.sigma2)

    def to_model(self) -> ComplexityModel:
        if self.model == ComplexityKind.LINEAR:
            return ComplexityModel.linear(self.snr_gap_db)
        return ComplexityModel.exponential()

    def to_scenario(self) -> Scenario:
        return Scenario(
            alpha=self.alpha,
            sigma2=self.sigma2,
            eta1=self.eta1,
            model=self.to_model(),
            network_kind=self.network,
        )

"""
子命令处理器
将校验后的 CliConfig 分发到核心库，返回记录表
"""

from dataclasses import dataclass, field

from loguru import logger

from src.core.config import Settings, get_settings
from src.core.energy import EnergyEvaluator, energy_savings
from src.core.experiments import ReproducePipeline, TradeoffExperiment, line_grid
from src.core.models import (
    CliConfig,
    Command,
    NetworkTopology,
    RecordTable,
    ReferenceSystem,
    SweepRecord,
)
from src.core.network import (
    ChannelModel,
    equal_allocation,
    linear_to_db,
    recursive_allocation,
)
from src.core.optimize import NetworkOptimizer

POWER_COLUMNS = (
    "n", "allocation", "node", "power_linear", "power_db", "hop_rate", "end_to_end_rate",
    "alpha", "pref", "rref", "sigma2",
)
SWEEP_COLUMNS = (
    "n", "delta_t", "e_tx_norm", "e_c_norm", "e_sum_norm", "eta", "savings",
    "r_ref", "alpha", "sigma2", "eta1", "model", "snr_gap_db", "network",
)
OPTIMIZE_COLUMNS = (
    "best_n", "best_delta_t", "e_sum_norm", "e_tx_norm", "e_c_norm", "eta",
    "candidates_examined", "burst_mode", "r_ref", "alpha", "sigma2", "eta1", "model",
    "snr_gap_db", "network", "n_max",
)


@dataclass
class CommandHandler:
    """命令处理器"""

    config: CliConfig
    settings: Settings = field(default_factory=get_settings)

    def handle(self) -> dict[str, RecordTable]:
        """执行子命令"""
        logger.info(f"执行子命令: {self.config.command}")
        match self.config.command:
            case Command.POWER_ASSIGN:
                tables = [self._power_assign()]
            case Command.ENERGY_SWEEP:
                tables = [self._energy_sweep()]
            case Command.TRADEOFF:
                tables = [self._tradeoff()]
            case Command.OPTIMIZE_N:
                tables = [self._optimize_n()]
            case Command.REPRODUCE:
                return self._reproduce()
        return {table.name: table for table in tables}

    @property
    def reference(self) -> ReferenceSystem:
        return self.config.to_reference(self.settings.default_pref)

    def _power_assign(self) -> RecordTable:
        """递推与等功率两种分配，附每跳速率与端到端速率"""
        cfg = self.config
        reference = self.reference
        records: list[SweepRecord] = []
        for n in sorted(set(cfg.n)):
            topo = NetworkTopology(n, cfg.alpha, cfg.sigma2)
            channel = ChannelModel(topo)
            for alloc in (
                recursive_allocation(n, cfg.alpha, reference.reference_power),
                equal_allocation(n, cfg.alpha, reference.reference_power),
            ):
                hop_rates = channel.per_hop_rates(alloc)
                end_to_end = min(hop_rates)
                for node, power in enumerate(alloc.powers):
                    records.append(
                        SweepRecord(
                            scenario_id=Command.POWER_ASSIGN.value,
                            variable="node",
                            value=node,
                            outputs={
                                "power_linear": power,
                                "power_db": linear_to_db(power / reference.reference_power),
                                "hop_rate": hop_rates[node],
                                "end_to_end_rate": end_to_end,
                            },
                            parameters={
                                "n": n,
                                "allocation": alloc.kind.value,
                                "alpha": cfg.alpha,
                                "pref": reference.reference_power,
                                "rref": reference.reference_rate,
                                "sigma2": cfg.sigma2,
                            },
                        )
                    )
        return RecordTable(name=Command.POWER_ASSIGN.value, columns=POWER_COLUMNS, records=records)

    def _sweep_deltas(self) -> list[float]:
        cfg = self.config
        if cfg.delta_start is not None:
            step = cfg.delta_step or self.settings.line_grid_step
            return list(line_grid(cfg.delta_start, step))
        return sorted(set(cfg.delta_t)) or [1.0]

    def _energy_sweep(self) -> RecordTable:
        """在 (N, δ_t) 网格上评估能量分解；溢出直接上抛（退出码 3）"""
        cfg = self.config
        scenario = cfg.to_scenario()
        evaluator = EnergyEvaluator(scenario)
        r_ref = self.reference.reference_rate
        records: list[SweepRecord] = []
        for n in sorted(set(cfg.n)):
            for delta_t in self._sweep_deltas():
                breakdown = evaluator.evaluate(n, delta_t, r_ref)
                records.append(
                    SweepRecord(
                        scenario_id=Command.ENERGY_SWEEP.value,
                        variable="delta_t",
                        value=delta_t,
                        outputs={
                            "e_tx_norm": breakdown.e_tx_norm,
                            "e_c_norm": breakdown.e_c_norm,
                            "e_sum_norm": breakdown.e_sum_norm,
                            "eta": breakdown.eta,
                            "savings": energy_savings(breakdown),
                        },
                        parameters={"n": n, "r_ref": r_ref, **scenario.echo()},
                    )
                )
        return RecordTable(name=Command.ENERGY_SWEEP.value, columns=SWEEP_COLUMNS, records=records)

    def _tradeoff(self) -> RecordTable:
        cfg = self.config
        experiment = TradeoffExperiment(
            r_values=(self.reference.reference_rate,),
            relay_counts=tuple(range(cfg.n_min, cfg.nmax + 1)),
            alpha=cfg.alpha,
            sigma2=cfg.sigma2,
            network_kinds=(cfg.network,),
            model=cfg.to_model(),
        )
        table = experiment.run()
        table.name = Command.TRADEOFF.value
        return table

    def _optimize_n(self) -> RecordTable:
        cfg = self.config
        scenario = cfg.to_scenario()
        r_ref = self.reference.reference_rate
        optimizer = NetworkOptimizer(scenario, self.settings.golden_tolerance)
        result = optimizer.best_relay_count(r_ref, cfg.nmax, cfg.burst_mode)
        best = result.breakdown
        record = SweepRecord(
            scenario_id=Command.OPTIMIZE_N.value,
            variable="r_ref",
            value=r_ref,
            outputs={
                "best_n": result.best_n,
                "best_delta_t": result.best_delta_t,
                "e_sum_norm": best.e_sum_norm,
                "e_tx_norm": best.e_tx_norm,
                "e_c_norm": best.e_c_norm,
                "eta": best.eta,
                "candidates_examined": result.candidates_examined,
            },
            parameters={**scenario.echo(), "burst_mode": cfg.burst_mode.value, "n_max": cfg.nmax},
        )
        return RecordTable(
            name=Command.OPTIMIZE_N.value, columns=OPTIMIZE_COLUMNS, records=[record], single=True
        )

    def _reproduce(self) -> dict[str, RecordTable]:
        cfg = self.config
        reference = self.reference
        pipeline = ReproducePipeline(
            alpha=cfg.alpha,
            sigma2=cfg.sigma2,
            p_ref=reference.reference_power,
            r_ref=reference.reference_rate,
            n_max=cfg.nmax,
            snr_gap_db=cfg.snr_gap_db,
            divisor=cfg.divisor,
        )
        return pipeline.run(cfg.figure)

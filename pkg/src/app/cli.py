"""
命令行参数定义
argparse 负责语法解析，CliConfig (Pydantic) 负责取值校验
"""

import argparse
from pathlib import Path

from src.core.config import LOG_LEVELS, Settings
from src.core.models import (
    BurstMode,
    CliConfig,
    Command,
    ComplexityKind,
    Figure,
    NetworkKind,
    OutputFormat,
)

EPILOG = """
示例:
  python -m src.app.main reproduce fig2
  python -m src.app.main reproduce all --out results/
  python -m src.app.main power-assign --n 4 --alpha 4
  python -m src.app.main energy-sweep --n 0 --n 1 --rref 1 --delta-t 0.5 --delta-t 1
  python -m src.app.main energy-sweep --n 1 --rref 1 --delta-start 0.0001 --delta-step 0.01
  python -m src.app.main tradeoff --rref 2 --network fixed --n-min 1 --nmax 30
  python -m src.app.main optimize-n --rref 2 --eta1-db 0 --model exp --network wireless --format json
"""


def _add_common_arguments(parser: argparse.ArgumentParser, settings: Settings) -> None:
    """所有子命令共享的网络与输出参数"""
    parser.add_argument("--alpha", type=float, default=settings.default_alpha, help="路径损耗指数")
    parser.add_argument("--sigma2", type=float, default=settings.default_sigma2, help="噪声功率（线性）")
    reference = parser.add_mutually_exclusive_group()
    reference.add_argument("--pref", type=float, default=None, help="参考功率（线性）")
    reference.add_argument("--rref", type=float, default=None, help="参考速率 bit/symbol")
    parser.add_argument("--eta1-db", type=float, default=settings.default_eta1_db, help="η_ref(1)，单位 dB")
    parser.add_argument(
        "--snr-gap-db", type=float, default=settings.default_snr_gap_db, help="线性复杂度的 SNR gap"
    )
    parser.add_argument(
        "--model", choices=[m.value for m in ComplexityKind], default=ComplexityKind.EXPONENTIAL.value
    )
    parser.add_argument(
        "--network", choices=[k.value for k in NetworkKind], default=NetworkKind.WIRELESS.value
    )
    parser.add_argument("--nmax", type=int, default=settings.default_n_max, help="最大中继数")
    parser.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value
    )
    parser.add_argument("--out", type=Path, default=None, help="输出文件或目录（默认标准输出）")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="覆盖配置中的日志级别",
    )


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    """构建命令行解析器"""
    parser = argparse.ArgumentParser(
        prog="multihop-energy",
        description="多跳 DF 网络的发射-计算能量权衡计算工具",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    power = subparsers.add_parser(Command.POWER_ASSIGN.value, help="各节点功率分配")
    power.add_argument("--n", type=int, action="append", help="中继数（可重复）")

    sweep = subparsers.add_parser(Command.ENERGY_SWEEP.value, help="按 (N, δ_t) 评估能量分解")
    sweep.add_argument("--n", type=int, action="append", help="中继数（可重复）")
    sweep.add_argument("--delta-t", type=float, action="append", help="突发因子（可重复）")
    sweep.add_argument("--delta-start", type=float, default=None, help="δ_t 网格起点")
    sweep.add_argument("--delta-step", type=float, default=None, help="δ_t 网格步长")

    tradeoff = subparsers.add_parser(Command.TRADEOFF.value, help="发射-计算能量权衡曲线")
    tradeoff.add_argument("--n-min", type=int, default=1, help="最小中继数")

    optimize = subparsers.add_parser(Command.OPTIMIZE_N.value, help="最优中继数")
    optimize.add_argument(
        "--burst-mode", choices=[m.value for m in BurstMode], default=BurstMode.COMP_OPT.value
    )

    reproduce = subparsers.add_parser(Command.REPRODUCE.value, help="复现图表数据")
    reproduce.add_argument("figure", choices=[f.value for f in Figure], help="图表名称")
    reproduce.add_argument("--divisor", type=int, default=5, help="功率分配图使用的 N+1")

    for sub in (power, sweep, tradeoff, optimize, reproduce):
        _add_common_arguments(sub, settings)
    return parser


def to_config(args: argparse.Namespace) -> CliConfig:
    """将解析结果转换为经过校验的 CliConfig"""
    values = {
        key: value
        for key, value in vars(args).items()
        if value is not None and key != "log_level"
    }
    return CliConfig(**values)

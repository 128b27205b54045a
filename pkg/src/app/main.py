"""
应用主入口
配置 loguru 日志并执行命令行
"""

import sys
from collections.abc import Sequence

from loguru import logger
from pydantic import ValidationError

from src.core.config import get_settings
from src.core.exceptions import DomainError, MultihopError

from .cli import build_parser, to_config
from .handlers import CommandHandler
from .writers import RecordWriter

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def _configure_logging(level: str | None = None) -> None:
    """配置 loguru 日志（只写标准错误，标准输出留给记录）"""
    settings = get_settings()

    # 移除默认 handler
    logger.remove()

    logger.add(
        sys.stderr,
        format=settings.log_format,
        level=(level or settings.log_level).upper(),
        colorize=True,
    )


def run(argv: Sequence[str] | None = None) -> int:
    """执行命令行，返回退出码"""
    settings = get_settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    _configure_logging(args.log_level)

    try:
        config = to_config(args)
    except ValidationError as e:
        logger.error(f"参数校验失败:\n{e}")
        return EXIT_USAGE

    try:
        tables = CommandHandler(config, settings).handle()
    except DomainError as e:
        logger.error(f"参数超出定义域: {e}")
        return EXIT_USAGE
    except MultihopError as e:
        logger.error(f"数值计算失败: {e}")
        return EXIT_NUMERICAL

    writer = RecordWriter(config.format, settings.csv_significant_digits)
    try:
        writer.write(tables, config.out, sys.stdout)
    except OSError as e:
        logger.error(f"无法写入输出 {config.out}: {e}")
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    """命令行入口"""
    sys.exit(run())


if __name__ == "__main__":
    main()

"""
多跳网络能量权衡 - 命令行应用
"""

from .handlers import CommandHandler
from .main import main, run
from .writers import RecordWriter

__all__ = [
    "CommandHandler",
    "RecordWriter",
    "main",
    "run",
]

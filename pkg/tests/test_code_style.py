"""
代码风格约束测试
"""

from pathlib import Path


def test_no_stdlib_logging(source_files: list[Path]):
    """日志统一使用 loguru"""
    offenders = [
        path for path in source_files
        if "import logging" in path.read_text(encoding="utf-8")
    ]
    assert offenders == []


def test_no_os_path(source_files: list[Path]):
    """路径操作统一使用 pathlib"""
    offenders = [path for path in source_files if "os.path" in path.read_text(encoding="utf-8")]
    assert offenders == []


def test_source_tree_not_empty(source_files: list[Path]):
    assert any(path.name == "main.py" for path in source_files)

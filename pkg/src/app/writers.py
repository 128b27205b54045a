"""
记录输出：CSV / JSON
CSV 与区域设置无关：'.' 小数点、',' 分隔、'\\n' 换行
"""

import csv
import io
import json
import math
from dataclasses import dataclass
from numbers import Integral, Real
from pathlib import Path
from typing import TextIO

from loguru import logger

from src.core.models import OutputFormat, RecordTable, Scalar


@dataclass
class RecordWriter:
    """按所选格式输出记录表"""

    output_format: OutputFormat = OutputFormat.CSV
    significant_digits: int = 6

    def render(self, tables: dict[str, RecordTable]) -> str:
        """渲染为文本（多个 CSV 表之间以 '# 名称' 行分隔）"""
        if self.output_format == OutputFormat.JSON:
            return self.render_json(tables)
        if len(tables) == 1:
            return self.render_csv(next(iter(tables.values())))
        return "\n".join(f"# {name}\n{self.render_csv(table)}" for name, table in tables.items())

    def write(self, tables: dict[str, RecordTable], out: Path | None, stream: TextIO) -> None:
        """写到文件、目录（多表 CSV）或标准输出"""
        if out is None:
            stream.write(self.render(tables))
            return
        if self.output_format == OutputFormat.CSV and len(tables) > 1:
            out.mkdir(parents=True, exist_ok=True)
            for name, table in tables.items():
                self._write_file(out / f"{name}.csv", self.render_csv(table))
            return
        self._write_file(out, self.render(tables))

    def render_csv(self, table: RecordTable) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows():
            writer.writerow([self._format_cell(row.get(column)) for column in table.columns])
        return buffer.getvalue()

    def render_json(self, tables: dict[str, RecordTable]) -> str:
        payloads = {name: self._json_payload(table) for name, table in tables.items()}
        document = next(iter(payloads.values())) if len(payloads) == 1 else payloads
        return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False, allow_nan=False) + "\n"

    def _json_payload(self, table: RecordTable) -> dict | list:
        rows = [{key: self._json_value(value) for key, value in row.items()} for row in table.rows()]
        if table.single and len(rows) == 1:
            return rows[0]
        return rows

    def _format_cell(self, value: Scalar) -> str:
        match value:
            case None:
                return ""
            case bool():
                return "true" if value else "false"
            case Integral():
                return str(int(value))
            case Real():
                return format(float(value), f".{self.significant_digits}g")
            case _:
                return str(value)

    @staticmethod
    def _json_value(value: Scalar) -> Scalar:
        if isinstance(value, bool) or value is None or isinstance(value, str):
            return value
        if isinstance(value, Integral):
            return int(value)
        if isinstance(value, Real):
            number = float(value)
            return number if math.isfinite(number) else None
        return str(value)

    @staticmethod
    def _write_file(path: Path, content: str) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8", newline="")
        logger.info(f"✅ 已写入: {path.absolute()}")

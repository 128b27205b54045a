"""
应用配置管理模块
使用 pydantic-settings 统一管理环境变量和配置
"""

from typing import Literal, get_args

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# loguru 内置级别
LogLevel = Literal["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"]
LOG_LEVELS: tuple[str, ...] = get_args(LogLevel)


class Settings(BaseSettings):
    """应用配置"""

    model_config = SettingsConfigDict(
        env_prefix="MULTIHOP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # 网络与参考系统默认参数
    default_alpha: float = Field(default=3.0, gt=0.0, le=10.0)
    default_sigma2: float = Field(default=1.0, gt=0.0)
    default_pref: float = Field(default=1.0, gt=0.0)
    default_eta1_db: float = Field(default=0.0, ge=-60.0, le=60.0)
    default_snr_gap_db: float = Field(default=5.0, ge=0.0, le=30.0)
    default_n_max: int = Field(default=64, ge=1, le=1024)

    # 优化器配置
    golden_tolerance: float = Field(default=1e-6, gt=0.0, le=1e-2)

    # 扫描网格
    line_grid_start: float = Field(default=1e-4, gt=0.0, lt=1.0)
    line_grid_step: float = Field(default=0.01, gt=0.0, le=0.5)
    marker_grid_step: float = Field(default=0.05, gt=0.0, le=0.5)
    low_rate_substitute: float = Field(default=1e-4, gt=0.0, lt=0.5)

    # 输出配置
    csv_significant_digits: int = Field(default=6, ge=6, le=17)

    # 日志配置
    log_level: LogLevel = Field(default="WARNING")
    log_format: str = Field(
        default="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
        "<level>{level: <8}</level> | "
        "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
        "<level>{message}</level>"
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def _normalize_level(cls, value: object) -> object:
        return value.upper() if isinstance(value, str) else value


# 全局配置实例（懒加载）
_settings: Settings | None = None


def get_settings() -> Settings:
    """获取配置实例（单例模式）"""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings

"""
pytest 共享 fixtures
"""

import math
from pathlib import Path

import pytest
from loguru import logger

from src.core.models import ComplexityModel, NetworkKind, Scenario

LN2 = math.log(2.0)


@pytest.fixture(autouse=True)
def quiet_logger():
    """测试期间只保留 WARNING 以上日志"""
    logger.remove()
    logger.add(lambda _: None, level="WARNING")
    yield
    # CLI 测试会重新配置 sink，这里统一清理
    logger.remove()


@pytest.fixture
def exp_model() -> ComplexityModel:
    return ComplexityModel.exponential()


@pytest.fixture
def linear_model() -> ComplexityModel:
    return ComplexityModel.linear(5.0)


@pytest.fixture
def wireless_scenario(exp_model: ComplexityModel) -> Scenario:
    """默认场景：α=3, σ²=1, η_ref(1)=0 dB, 指数复杂度"""
    return Scenario(alpha=3.0, sigma2=1.0, eta1=1.0, model=exp_model)


@pytest.fixture
def fixed_scenario(exp_model: ComplexityModel) -> Scenario:
    return Scenario(
        alpha=3.0, sigma2=1.0, eta1=1.0, model=exp_model, network_kind=NetworkKind.FIXED
    )


@pytest.fixture
def temp_dir(tmp_path: Path) -> Path:
    """临时目录"""
    return tmp_path


@pytest.fixture
def source_files() -> list[Path]:
    """获取所有源文件"""
    return list(Path("src").rglob("*.py"))

"""
发射能量-计算能量权衡曲线
"""

from collections.abc import Iterable

from ..energy.complexity import comp_optimal_delta
from ..energy.evaluator import EnergyEvaluator
from ..exceptions import DomainError
from ..models import ComplexityModel, NetworkKind, Scenario

type TradeoffPoint = tuple[float, float]


def tradeoff_curve(
    r_ref: float,
    alpha: float,
    sigma2: float,
    n_range: Iterable[int],
    network_kind: NetworkKind,
    model: ComplexityModel | None = None,
) -> list[TradeoffPoint]:
    """每个 N 一个点 (e_tx_norm, e_c_norm)，δ_t 取计算最优值，按 N 升序"""
    relay_counts = sorted(set(n_range))
    if not relay_counts:
        raise DomainError("n_range 不能为空")
    model = model or ComplexityModel.exponential()
    # η 不影响两个坐标
    evaluator = EnergyEvaluator(
        Scenario(alpha=alpha, sigma2=sigma2, eta1=1.0, model=model, network_kind=network_kind)
    )
    delta_t = comp_optimal_delta(r_ref, model)
    points: list[TradeoffPoint] = []
    for n in relay_counts:
        breakdown = evaluator.evaluate(n, delta_t, r_ref)
        points.append((breakdown.e_tx_norm, breakdown.e_c_norm))
    return points

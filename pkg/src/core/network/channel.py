"""
信道模型
等间距节点几何、路径损耗增益、Shannon 容量以及 decode-and-forward 端到端速率
"""

import math
from dataclasses import dataclass

import numpy as np
from loguru import logger

from ..exceptions import DomainError, SingularityError
from ..models import NetworkTopology, PowerAllocation

LN2 = math.log(2.0)


def capacity(snr: float) -> float:
    """C(x) = log2(1 + x)，单位 bit/symbol"""
    if not math.isfinite(snr) or snr < 0:
        raise DomainError(f"SNR 必须为非负有限值，实际为 {snr}")
    return float(np.log1p(snr)) / LN2


def inverse_capacity(rate: float) -> float:
    """C 的反函数：达到 rate 所需的 SNR = 2^rate − 1"""
    if not math.isfinite(rate) or rate < 0:
        raise DomainError(f"速率必须为非负有限值，实际为 {rate}")
    return float(np.expm1(rate * LN2))


def db_to_linear(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


def linear_to_db(value: float) -> float:
    if not value > 0:
        raise DomainError(f"只能对正值取 dB，实际为 {value}")
    return 10.0 * math.log10(value)


@dataclass(frozen=True)
class ChannelModel:
    """AWGN 多跳信道：增益 h² = d^(−α)"""

    topology: NetworkTopology

    def distance(self, n: int, n2: int) -> float:
        """d_{n,n'} = |n' − n| / (N+1) · d_sd"""
        self._check_index(n)
        self._check_index(n2)
        topo = self.topology
        return abs(n2 - n) * topo.source_dest_distance / (topo.relay_count + 1)

    def power_gain(self, n: int, n2: int) -> float:
        if n == n2:
            raise SingularityError(f"节点 {n} 到自身的距离为 0，增益无穷大")
        return self.distance(n, n2) ** (-self.topology.path_loss_exponent)

    def per_hop_rates(self, allocation: PowerAllocation) -> list[float]:
        """每个接收节点 n = 1…N+1 的协作累积功率容量"""
        topo = self.topology
        if len(allocation.powers) != topo.relay_count + 1:
            raise DomainError(
                f"功率分配长度 {len(allocation.powers)} 与节点数 {topo.relay_count + 1} 不符"
            )
        powers = allocation.as_array()
        spacing = topo.source_dest_distance / (topo.relay_count + 1)
        rates: list[float] = []
        for receiver in range(1, topo.destination + 1):
            senders = np.arange(receiver)
            gains = ((receiver - senders) * spacing) ** (-topo.path_loss_exponent)
            received = float(np.dot(gains, powers[:receiver]))
            rates.append(capacity(received / topo.noise_power))
        return rates

    def end_to_end_rate(self, allocation: PowerAllocation) -> float:
        rates = self.per_hop_rates(allocation)
        bottleneck = int(np.argmin(rates))
        logger.debug(f"DF 端到端速率 {rates[bottleneck]:.6g}，瓶颈接收节点 {bottleneck + 1}")
        return rates[bottleneck]

    def _check_index(self, n: int) -> None:
        if not 0 <= n <= self.topology.destination:
            raise DomainError(f"节点索引 {n} 超出范围 [0, {self.topology.destination}]")


# ============ 兼容函数接口 ============


def node_distance(n: int, n2: int, topo: NetworkTopology) -> float:
    return ChannelModel(topo).distance(n, n2)


def channel_power_gain(n: int, n2: int, topo: NetworkTopology) -> float:
    return ChannelModel(topo).power_gain(n, n2)


def per_hop_rates(topo: NetworkTopology, alloc: PowerAllocation) -> list[float]:
    return ChannelModel(topo).per_hop_rates(alloc)


def df_end_to_end_rate(topo: NetworkTopology, alloc: PowerAllocation) -> float:
    """协作 DF 可达速率：各接收节点累积容量的最小值"""
    return ChannelModel(topo).end_to_end_rate(alloc)

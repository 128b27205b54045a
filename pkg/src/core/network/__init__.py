"""
网络模型：信道与功率分配
"""

from .channel import (
    ChannelModel,
    capacity,
    channel_power_gain,
    db_to_linear,
    df_end_to_end_rate,
    inverse_capacity,
    linear_to_db,
    node_distance,
    per_hop_rates,
)
from .power_alloc import (
    RecursivePowerAllocator,
    equal_allocation,
    recursive_allocation,
    source_power,
)

__all__ = [
    # 类
    "ChannelModel",
    "RecursivePowerAllocator",
    # 函数
    "capacity",
    "channel_power_gain",
    "db_to_linear",
    "df_end_to_end_rate",
    "equal_allocation",
    "inverse_capacity",
    "linear_to_db",
    "node_distance",
    "per_hop_rates",
    "recursive_allocation",
    "source_power",
]

"""
信道模型测试
"""

import math

import numpy as np
import pytest

from src.core.exceptions import DomainError, NumericalOverflowError, SingularityError
from src.core.models import NetworkTopology, PowerAllocation, ReferenceSystem
from src.core.network import (
    capacity,
    channel_power_gain,
    db_to_linear,
    df_end_to_end_rate,
    equal_allocation,
    inverse_capacity,
    linear_to_db,
    node_distance,
    per_hop_rates,
    recursive_allocation,
)


class TestCapacity:
    @pytest.mark.parametrize(("snr", "expected"), [(1.0, 1.0), (0.0, 0.0), (3.0, 2.0)])
    def test_values(self, snr: float, expected: float):
        assert capacity(snr) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize("snr", [-1e-9, -1.0, math.inf, math.nan])
    def test_domain_error(self, snr: float):
        with pytest.raises(DomainError):
            capacity(snr)

    def test_concave_and_increasing(self):
        grid = np.linspace(0.0, 50.0, 501)
        values = np.array([capacity(x) for x in grid])
        assert np.all(np.diff(values) > 0)
        second = values[:-2] - 2 * values[1:-1] + values[2:]
        assert np.all(second <= 1e-12)

    @pytest.mark.parametrize("rate", [0.0, 0.1, 1.0, 2.5, 7.0])
    def test_inverse(self, rate: float):
        assert capacity(inverse_capacity(rate)) == pytest.approx(rate, rel=1e-12, abs=1e-15)

    def test_db_helpers(self):
        assert linear_to_db(0.008) == pytest.approx(-20.9691, abs=1e-4)
        assert db_to_linear(-10.0) == pytest.approx(0.1)
        with pytest.raises(DomainError):
            linear_to_db(0.0)


class TestGeometry:
    @pytest.mark.parametrize(
        ("relays", "n", "n2", "expected"),
        [(1, 0, 1, 0.5), (0, 0, 1, 1.0), (4, 2, 5, 0.6)],
    )
    def test_node_distance(self, relays: int, n: int, n2: int, expected: float):
        topo = NetworkTopology(relays)
        assert node_distance(n, n2, topo) == pytest.approx(expected)
        assert node_distance(n2, n, topo) == pytest.approx(expected)

    def test_distance_endpoints(self):
        topo = NetworkTopology(3, source_dest_distance=2.5)
        assert node_distance(2, 2, topo) == 0.0
        assert node_distance(0, topo.destination, topo) == pytest.approx(2.5)

    def test_index_out_of_range(self):
        topo = NetworkTopology(2)
        with pytest.raises(DomainError):
            node_distance(0, 4, topo)
        with pytest.raises(DomainError):
            node_distance(-1, 1, topo)

    @pytest.mark.parametrize(
        ("relays", "n", "n2", "alpha", "expected"),
        [(1, 0, 1, 3.0, 8.0), (0, 0, 1, 4.2, 1.0), (4, 1, 2, 3.0, 125.0)],
    )
    def test_power_gain(self, relays: int, n: int, n2: int, alpha: float, expected: float):
        topo = NetworkTopology(relays, path_loss_exponent=alpha)
        assert channel_power_gain(n, n2, topo) == pytest.approx(expected)

    def test_gain_singularity(self):
        with pytest.raises(SingularityError):
            channel_power_gain(1, 1, NetworkTopology(2))

    def test_gain_decreases_with_distance(self):
        topo = NetworkTopology(5)
        gains = [channel_power_gain(0, k, topo) for k in range(1, 7)]
        assert all(a > b for a, b in zip(gains, gains[1:], strict=False))

    @pytest.mark.parametrize("relays", [-1])
    def test_invalid_topology(self, relays: int):
        with pytest.raises(DomainError):
            NetworkTopology(relays)


class TestEndToEndRate:
    def test_single_hop(self):
        topo = NetworkTopology(0)
        assert df_end_to_end_rate(topo, PowerAllocation((1.0,))) == pytest.approx(1.0)

    @pytest.mark.parametrize("relays", [1, 2, 5, 12])
    @pytest.mark.parametrize("alpha", [2.0, 3.0, 4.5])
    def test_recursive_allocation_hits_reference_rate(self, relays: int, alpha: float):
        topo = NetworkTopology(relays, path_loss_exponent=alpha)
        alloc = recursive_allocation(relays, alpha, 1.0)
        assert df_end_to_end_rate(topo, alloc) == pytest.approx(capacity(1.0), rel=1e-12)

    def test_every_hop_equal_under_recursion(self):
        topo = NetworkTopology(6)
        rates = per_hop_rates(topo, recursive_allocation(6, 3.0, 2.0))
        assert len(rates) == 7
        assert np.allclose(rates, capacity(2.0), rtol=1e-12)

    def test_equal_allocation_dominates(self):
        topo = NetworkTopology(1)
        rate = df_end_to_end_rate(topo, PowerAllocation((0.125, 0.125)))
        assert rate >= 1.0
        assert df_end_to_end_rate(topo, equal_allocation(1, 3.0, 1.0)) >= 1.0

    def test_monotone_in_allocation(self):
        topo = NetworkTopology(3)
        base = recursive_allocation(3, 3.0, 1.0)
        bumped = PowerAllocation(tuple(p * 1.1 for p in base.powers))
        assert df_end_to_end_rate(topo, bumped) >= df_end_to_end_rate(topo, base)

    def test_length_mismatch(self):
        with pytest.raises(DomainError):
            df_end_to_end_rate(NetworkTopology(2), PowerAllocation((1.0, 1.0)))


class TestReferenceSystem:
    def test_rate_matches_capacity(self):
        ref = ReferenceSystem.from_power(3.0, noise_power=1.0, slot_count=100)
        assert ref.reference_rate == pytest.approx(2.0, rel=1e-15)
        assert ref.payload_bits == pytest.approx(200.0)

    def test_from_rate(self):
        ref = ReferenceSystem.from_rate(2.0, noise_power=0.5)
        assert ref.reference_power == pytest.approx(1.5)
        assert ref.reference_rate == pytest.approx(2.0, rel=1e-14)

    @pytest.mark.parametrize("rate", [0.0, -1.0, math.inf])
    def test_invalid_rate(self, rate: float):
        with pytest.raises(DomainError):
            ReferenceSystem.from_rate(rate)

    def test_rate_beyond_float_range(self):
        with pytest.raises(NumericalOverflowError):
            ReferenceSystem.from_rate(1100.0)

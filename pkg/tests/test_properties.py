"""
基于 hypothesis 的性质测试
"""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.core.energy import bursty_power, e_tx_norm_exact, e_tx_norm_fixed
from src.core.models import NetworkTopology
from src.core.network import (
    capacity,
    df_end_to_end_rate,
    equal_allocation,
    recursive_allocation,
)

powers = st.floats(min_value=1e-6, max_value=1e3, allow_nan=False, allow_infinity=False)
noise = st.floats(min_value=0.1, max_value=10.0)
deltas = st.floats(min_value=0.05, max_value=1.0)
alphas = st.floats(min_value=2.0, max_value=6.0)
relays = st.integers(min_value=0, max_value=12)


@settings(max_examples=1000, deadline=None)
@given(power=powers, sigma2=noise, delta_t=deltas)
def test_burst_preserves_rate(power: float, sigma2: float, delta_t: float):
    """δ_t·C(P'/σ²) = C(P/σ²)"""
    p_prime = bursty_power(power, sigma2, delta_t)
    assume(p_prime < 1e300)
    assert delta_t * capacity(p_prime / sigma2) == pytest.approx(
        capacity(power / sigma2), rel=1e-12
    )


@settings(max_examples=200, deadline=None)
@given(power=powers, low=deltas, high=deltas)
def test_burst_power_decreases_with_slot(power: float, low: float, high: float):
    assume(low < high)
    assert bursty_power(power, 1.0, low) >= bursty_power(power, 1.0, high)


@settings(max_examples=200, deadline=None)
@given(n=relays, alpha=alphas, low=deltas, high=deltas)
def test_transmission_energy_strictly_decreases_with_slot(
    n: int, alpha: float, low: float, high: float
):
    assume(high - low > 1e-3)
    alloc = recursive_allocation(n, alpha, 1.0)
    assert e_tx_norm_exact(alloc, low, 1.0) > e_tx_norm_exact(alloc, high, 1.0)


@settings(max_examples=200, deadline=None)
@given(n=relays, alpha=alphas, low=deltas, high=deltas)
def test_fixed_energy_strictly_decreases_with_slot(
    n: int, alpha: float, low: float, high: float
):
    assume(high - low > 1e-3)
    assert e_tx_norm_fixed(n, alpha, low, 1.0) > e_tx_norm_fixed(n, alpha, high, 1.0)


@settings(max_examples=200, deadline=None)
@given(n=relays, alpha=alphas, delta_t=deltas, p_ref=st.floats(min_value=0.01, max_value=10.0))
def test_fixed_bound(n: int, alpha: float, delta_t: float, p_ref: float):
    alloc = recursive_allocation(n, alpha, p_ref)
    exact = e_tx_norm_exact(alloc, delta_t, p_ref)
    assert e_tx_norm_fixed(n, alpha, delta_t, p_ref) >= exact * (1 - 1e-12)


@settings(max_examples=200, deadline=None)
@given(n=relays, alpha=alphas, p_ref=st.floats(min_value=0.01, max_value=100.0))
def test_allocation_ordering(n: int, alpha: float, p_ref: float):
    rec = recursive_allocation(n, alpha, p_ref)
    eq = equal_allocation(n, alpha, p_ref)
    assert all(r <= e * (1 + 1e-12) for r, e in zip(rec.powers, eq.powers, strict=True))
    assert all(p > 0 for p in rec.powers)


@settings(max_examples=200, deadline=None)
@given(n=relays, alpha=alphas, p_ref=st.floats(min_value=0.01, max_value=100.0))
def test_recursion_meets_reference_rate(n: int, alpha: float, p_ref: float):
    topo = NetworkTopology(n, path_loss_exponent=alpha)
    rate = df_end_to_end_rate(topo, recursive_allocation(n, alpha, p_ref))
    assert rate == pytest.approx(capacity(p_ref), rel=1e-9)

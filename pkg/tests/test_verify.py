import math

import numpy as np

from qwcycle.coin import build_coin
from qwcycle.evolution import time_avg_distribution, time_avg_reduced_density
from qwcycle.state import WalkState
from qwcycle.verify import (
    THETA_RANGE,
    VerifyConfig,
    _batched_time_averages,
    run_verification,
    sample_coins,
)

TINY = VerifyConfig(n_values=(3, 4), coins_per_n=4, states_per_coin=2, t_max=5_000, seed=11)


def test_sampled_coins_hit_the_degeneracy_grid(rng):
    n = 9
    coins = sample_coins(rng, n, 10)
    assert len(coins) == 10
    for i, coin in enumerate(coins):
        assert THETA_RANGE[0] <= coin.theta <= THETA_RANGE[1]
        if i % 2 == 0:
            m = n * (1.0 + coin.zeta / math.pi)
            assert abs(m - round(m)) < 1e-9


def test_batched_loop_matches_single_instance_oracle(rng):
    """The sweep's batched einsum must do the same arithmetic as the oracle."""
    n, t = 5, 400
    coins = sample_coins(rng, n, 3)
    mats = np.array([build_coin(c) for c in coins])
    z = rng.standard_normal((3, 2, n)) + 1j * rng.standard_normal((3, 2, n))
    z /= np.linalg.norm(z.reshape(3, -1), axis=1)[:, None, None]

    dist, rho = _batched_time_averages(mats, z, t)
    for x in range(3):
        state = WalkState.from_grid(z[x])
        assert np.abs(dist[x] - time_avg_distribution(state, mats[x], t)).max() < 1e-12
        assert np.abs(rho[x] - time_avg_reduced_density(state, mats[x], t)).max() < 1e-12


def test_small_sweep_passes():
    report = run_verification(TINY)
    assert report.passed
    assert report.max_ld_deviation < TINY.tolerance
    assert report.max_rho_deviation < TINY.tolerance
    assert report.max_density_defect < 1e-10
    lines = report.summary_lines()
    assert lines[-1].endswith("PASS")
    assert len(lines) == len(TINY.n_values) + 1


def test_fixed_seed_reproduces_identical_report():
    a = run_verification(TINY)
    b = run_verification(TINY)
    assert a.summary_lines() == b.summary_lines()
    assert a.cases == b.cases


def test_insufficient_averaging_is_reported_as_failure():
    report = run_verification(
        VerifyConfig(n_values=(3,), coins_per_n=2, states_per_coin=2, t_max=10, seed=11)
    )
    assert not report.passed
    lines = report.summary_lines()
    assert lines[-2].endswith("FAIL")
    assert "worst configuration" in lines[-1]

import dataclasses

import numpy as np
import pytest

import lcmjumps.vertex_sim as vs
from lcmjumps import _kernels_py
from lcmjumps._quad import trapz
from lcmjumps.errors import EnvelopeViolation

import golden


# ---------------------------------------------------------------------------
# tables and the static laws they encode
# ---------------------------------------------------------------------------

def test_tables_shapes_and_monotonicity(tables):
    assert np.all(np.diff(tables.phiinv_tab) >= 0.0)
    assert np.all(tables.env_h > 0.0)
    assert np.all(tables.env_y > 0.0)
    assert tables.fv0_cap >= np.max(tables.fv0_tab)


def test_table_range_validation(suite):
    with pytest.raises(ValueError):
        vs.build_sim_tables(suite=suite, env_lo=-9.0)
    with pytest.raises(ValueError):
        vs.build_sim_tables(suite=suite, v0_half=9.0)


def test_jump_density_normalized(tables):
    yy = np.linspace(0.0, 3.9, 4001)
    for s in (-2.0, 0.0, 2.0):
        mass = trapz(vs.jump_density(s, yy, tables), yy)
        assert abs(mass - 1.0) <= 1e-5, s


def test_kernel_interp_matches_numpy():
    tab = np.array([1.0, 3.0, 2.0, 5.0])
    xs = 0.5 + 0.25 * np.arange(4)
    for x in (0.5, 0.61, 0.99, 1.25, 1.2499999):
        got = _kernels_py._lin(0.5, 4.0, tab, x, False)
        assert abs(got - np.interp(x, xs, tab)) <= 1e-14
    # clamping left, zero beyond the right end when requested
    assert _kernels_py._lin(0.5, 4.0, tab, 0.2, False) == 1.0
    assert _kernels_py._lin(0.5, 4.0, tab, 1.3, False) == 5.0
    assert _kernels_py._lin(0.5, 4.0, tab, 1.3, True) == 0.0
    assert _kernels_py._lin(0.5, 4.0, tab, 1.25, True) == 0.0


# ---------------------------------------------------------------------------
# the three sampling laws
# ---------------------------------------------------------------------------

def test_initial_state_moments(tables):
    rng = np.random.default_rng(42)
    draws = np.array([vs.sample_v0(rng, tables) for _ in range(100000)])
    assert np.all(np.abs(draws) <= tables.v0_half)
    assert abs(draws.mean()) <= 7e-3
    assert abs((draws ** 2).mean() - golden.EV0_SQ) <= 1e-2


def test_waiting_time_law(tables, suite):
    rng = np.random.default_rng(4)
    for s in (0.5, 1.0, 2.0):
        waits = np.sort([vs.sample_waiting_time(rng, s, tables)
                         for _ in range(2000)])
        lo = np.clip(s - waits, -8.0, 8.0)
        cdf = 1.0 - np.exp(suite.Phi(lo) - suite.Phi(s))
        emp = (np.arange(2000) + 0.5) / 2000.0
        assert np.max(np.abs(cdf - emp)) <= 0.05, s


def test_waiting_time_tail_extension(tables):
    # force the analytic continuation beyond the table with a huge draw
    s = 0.0
    w = float(tables.Phi_tab[-1]) - tables.hg0 + 50.0
    wait, flagged = vs._waiting(w, s, tables)
    assert flagged
    end = s - wait
    assert end < -8.0
    # the cubic-tail inversion must satisfy its own hazard model
    target = np.interp(s, tables.phi_x0 + tables.dx * np.arange(
        len(tables.Phi_tab)), tables.Phi_tab) - w
    model = tables.hg0 + (end ** 3 - tables.phi_x0 ** 3) / 1.5
    assert abs(model - target) <= 1e-9 * abs(target)


def test_jump_law_mean_matches_quadrature(tables):
    rng = np.random.default_rng(9)
    n = 20000
    jumps = np.array([vs.sample_jump(rng, 0.0, tables) for _ in range(n)])
    yy = np.linspace(0.0, 3.9, 4001)
    dens = vs.jump_density(0.0, yy, tables)
    mean_ref = trapz(yy ** 2 * dens, yy)
    se = jumps.std(ddof=1) / np.sqrt(n)
    assert abs(jumps.mean() - mean_ref) <= 4.0 * se


# ---------------------------------------------------------------------------
# paths
# ---------------------------------------------------------------------------

def test_path_invariants(tables):
    cfg = vs.SimConfig(horizon=500.0, replications=1, seed=1)
    path = vs.simulate_path(cfg, tables=tables)
    assert len(path) > 0
    assert path.times[0] > 0.0 and path.times[-1] <= cfg.horizon
    assert np.all(np.diff(path.times) > 0.0)
    assert np.all(np.diff(path.locations) >= 0.0)
    s = path.locations - path.times
    assert s.min() > -8.6 and s.max() < 8.0
    assert path.flagged_waits == 0


def test_kernel_parity():
    if vs.KERNEL_IMPL != "compiled":
        pytest.skip("compiled kernel not built")
    from lcmjumps import _kernels
    tables = vs.default_tables()
    args = tables.as_kernel_args()
    for seed in (0, 7, 123):
        r1, r2 = np.random.default_rng(seed), np.random.default_rng(seed)
        v1, v2 = vs.sample_v0(r1, tables), vs.sample_v0(r2, tables)
        assert v1 == v2
        a = _kernels.run_path(r1, v1, 1000.0, *args)
        b = _kernels_py.run_path(r2, v2, 1000.0, *args)
        assert np.array_equal(a[0], b[0])
        assert np.array_equal(a[1], b[1])
        assert a[2] == b[2]


def test_stationary_marginal_at_interior_time(tables):
    # the recentered state at a fixed interior time must follow the same
    # law as the initial state
    t_star = 137.5
    cfg = vs.SimConfig(horizon=150.0, replications=1, window=15.0, seed=0)
    states = np.empty(400)
    children = np.random.SeedSequence(2024).spawn(400)
    for i, child in enumerate(children):
        rng = np.random.default_rng(child)
        path = vs.simulate_path(cfg, rng=rng, tables=tables)
        k = np.searchsorted(path.times, t_star) - 1
        x = path.v0 if k < 0 else path.locations[k]
        states[i] = x - t_star
    xs = tables.fv0_x0 + tables.fv0_dx * np.arange(len(tables.fv0_tab))
    cdf_tab = np.concatenate(
        ([0.0], np.cumsum((tables.fv0_tab[1:] + tables.fv0_tab[:-1]) * 0.5
                          * tables.fv0_dx)))
    cdf_tab /= cdf_tab[-1]
    emp = (np.arange(400) + 0.5) / 400.0
    cdf = np.interp(np.sort(states), xs, cdf_tab)
    assert np.max(np.abs(cdf - emp)) <= 0.09


def test_window_counts_match_manual_decomposition(tables):
    cfg = vs.SimConfig(horizon=300.0, replications=3, window=30.0, seed=5)
    stats = vs.estimate_rates(cfg, tables=tables)
    nw = int(cfg.horizon / cfg.window)
    manual = []
    for child in np.random.SeedSequence(cfg.seed).spawn(cfg.replications):
        rng = np.random.default_rng(child)
        path = vs.simulate_path(cfg, rng=rng, tables=tables)
        idx = np.floor_divide(path.times, cfg.window).astype(np.int64)
        manual.append(np.bincount(idx[idx < nw], minlength=nw))
    assert np.array_equal(stats.window_counts, np.concatenate(manual))
    assert stats.n_windows == 3 * nw


def test_estimate_rates_reproducible(tables):
    cfg = vs.SimConfig(horizon=300.0, replications=2, window=30.0, seed=11)
    a = vs.estimate_rates(cfg, tables=tables)
    b = vs.estimate_rates(cfg, tables=tables)
    assert np.array_equal(a.window_counts, b.window_counts)
    assert a.mean_rate == b.mean_rate and a.var_rate == b.var_rate


def test_count_stats_internal_consistency(tables):
    cfg = vs.SimConfig(horizon=400.0, replications=2, window=40.0, seed=3)
    stats = vs.estimate_rates(cfg, tables=tables)
    c = stats.window_counts
    assert stats.mean_rate == c.mean() / cfg.window
    assert stats.var_rate == c.var(ddof=1) / cfg.window
    assert stats.n_flagged == 0


def test_clt_check_fields(tables):
    cfg = vs.SimConfig(horizon=500.0, replications=4, seed=2)
    stats = vs.estimate_rates(cfg, tables=tables)
    chk = vs.clt_check(stats)
    assert set(chk) == {"mean", "var", "skew", "kurt", "ks", "n_windows"}
    assert chk["n_windows"] == stats.n_windows
    assert vs.clt_check(stats) == chk


# ---------------------------------------------------------------------------
# guards
# ---------------------------------------------------------------------------

def test_sim_config_validation():
    with pytest.raises(ValueError):
        vs.SimConfig(horizon=100.0, replications=1, window=0.5)
    with pytest.raises(ValueError):
        vs.SimConfig(horizon=100.0, replications=1, window=50.0)
    with pytest.raises(ValueError):
        vs.SimConfig(horizon=500.0, replications=0)


def test_vertex_path_validation():
    with pytest.raises(ValueError):
        vs.VertexPath(v0=0.0, times=np.array([1.0, 1.0]),
                      locations=np.array([0.5, 0.6]), flagged_waits=0)
    with pytest.raises(ValueError):
        vs.VertexPath(v0=0.0, times=np.array([1.0, 2.0]),
                      locations=np.array([0.6, 0.5]), flagged_waits=0)
    with pytest.raises(ValueError):
        vs.VertexPath(v0=0.0, times=np.array([1.0]),
                      locations=np.array([]), flagged_waits=0)
    # equal consecutive locations are float absorption, not an error
    vs.VertexPath(v0=0.0, times=np.array([1.0, 2.0]),
                  locations=np.array([0.5, 0.5]), flagged_waits=0)


def test_envelope_violation_raised(tables):
    broken = dataclasses.replace(tables, env_h=tables.env_h * 1e-3)
    cfg = vs.SimConfig(horizon=500.0, replications=1, seed=0)
    with pytest.raises(EnvelopeViolation):
        vs.simulate_path(cfg, tables=broken)

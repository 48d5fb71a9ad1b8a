import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import lcmjumps.grenander as gr

import golden
import oracles


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

def test_sample_sorted_triangular():
    rng = np.random.default_rng(0)
    x = gr.sample_sorted(gr.TRIANGULAR, 5000, rng=rng)
    assert np.all(np.diff(x) >= 0.0)
    assert x[0] >= 0.0 and x[-1] <= 1.0
    # median of the triangular law is 1 - sqrt(1/2)
    med = 1.0 - np.sqrt(0.5)
    assert abs(np.median(x) - med) <= 4.0 * 0.5 / np.sqrt(5000) / gr.TRIANGULAR.pdf(med)


def test_sample_sorted_exponential():
    rng = np.random.default_rng(1)
    x = gr.sample_sorted(gr.EXPONENTIAL, 5000, rng=rng)
    assert np.all(np.diff(x) >= 0.0)
    assert x[0] >= 0.0
    assert abs(np.median(x) - np.log(2.0)) <= 4.0 * 0.5 / np.sqrt(5000) / gr.EXPONENTIAL.pdf(np.log(2.0))


# ---------------------------------------------------------------------------
# hull construction
# ---------------------------------------------------------------------------

def test_hull_worked_example():
    m = gr.lcm_empirical(np.array([0.2, 0.5, 0.5, 0.9]))
    assert np.array_equal(m.x, [0.0, 0.5, 0.9])
    assert np.array_equal(m.y, [0.0, 0.75, 1.0])
    assert m.n_segments == 2


def test_hull_single_point():
    m = gr.lcm_empirical(np.array([0.4]))
    assert np.array_equal(m.x, [0.0, 0.4])
    assert np.array_equal(m.y, [0.0, 1.0])
    assert gr.grenander_jump_count(np.array([0.4])) == 1


def test_hull_all_duplicates():
    m = gr.lcm_empirical(np.full(5, 0.5))
    assert m.n_segments == 1
    assert m.y[-1] == 1.0


def test_hull_rejects_negative():
    with pytest.raises(ValueError):
        gr.lcm_empirical(np.array([-0.1, 0.5]))


def test_majorant_evaluation():
    m = gr.lcm_empirical(np.array([0.2, 0.5, 0.5, 0.9]))
    assert m(0.5) == 0.75
    assert abs(m(0.25) - 0.375) <= 1e-15
    assert np.all(np.diff(m.slopes) < 0.0)
    with pytest.raises(ValueError):
        m(1.0)
    with pytest.raises(ValueError):
        m(-0.01)


def test_hull_matches_bruteforce_oracle():
    rng = np.random.default_rng(7)
    for trial in range(300):
        n = int(rng.integers(1, 13))
        if trial % 2 == 0:
            sample = rng.random(n)
        else:
            sample = rng.standard_exponential(n)
        m = gr.lcm_empirical(sample)
        xs = np.concatenate(([0.0], np.sort(sample)))
        ys = np.arange(n + 1) / n
        keep = np.nonzero(np.diff(xs, append=np.inf) > 0.0)[0]
        idx = oracles.hull_brute(xs[keep], ys[keep])
        assert np.array_equal(m.x, xs[keep][idx])
        assert np.array_equal(m.y, ys[keep][idx])


@settings(max_examples=120, deadline=None)
@given(st.lists(st.floats(1e-6, 5.0), min_size=1, max_size=40))
def test_hull_properties(sample):
    sample = np.array(sample)
    n = len(sample)
    m = gr.lcm_empirical(sample)
    assert m.x[0] == 0.0 and m.y[0] == 0.0
    assert m.x[-1] == np.max(sample) and m.y[-1] == 1.0
    assert 1 <= m.n_segments <= n
    assert np.all(np.diff(m.slopes) < 0.0)
    # majorant dominates the empirical distribution at the data
    xs = np.sort(np.unique(sample))
    ecdf = np.searchsorted(np.sort(sample), xs, side="right") / n
    assert np.all(m(xs) >= ecdf - 1e-12)


# ---------------------------------------------------------------------------
# theory coefficients
# ---------------------------------------------------------------------------

def test_theory_coefficients_exact():
    assert abs(gr.theory_coefficient(gr.TRIANGULAR) - golden.TRI_COEFF) <= 1e-5
    assert abs(gr.theory_coefficient(gr.EXPONENTIAL) - golden.EXP_COEFF) <= 1e-5


def test_theory_coefficient_scale_invariance():
    # (f'^2 / 4f)^{1/3} integrates to the same value for any scale copy
    exp2 = gr.DecreasingDensity(
        name="exp-rate-2",
        pdf=lambda x: np.where(x >= 0.0, 2.0 * np.exp(-2.0 * np.maximum(x, 0.0)), 0.0),
        pdf_deriv=lambda x: np.where(x >= 0.0, -4.0 * np.exp(-2.0 * np.maximum(x, 0.0)), 0.0),
        support_end=np.inf,
        inverse_cdf=lambda q: -0.5 * np.log1p(-q))
    assert abs(gr.theory_coefficient(exp2) - golden.EXP_COEFF) <= 1e-8

    tri2 = gr.DecreasingDensity(
        name="triangular-width-2",
        pdf=lambda x: np.where((x >= 0.0) & (x <= 2.0), 1.0 - np.asarray(x) / 2.0, 0.0),
        pdf_deriv=lambda x: np.where((x >= 0.0) & (x <= 2.0), -0.5, 0.0),
        support_end=2.0,
        inverse_cdf=lambda q: 2.0 * (1.0 - np.sqrt(1.0 - q)))
    assert abs(gr.theory_coefficient(tri2) - golden.TRI_COEFF) <= 1e-8


def test_theory_coefficient_rejects_flat_density():
    flat = gr.DecreasingDensity(
        name="uniform",
        pdf=lambda x: np.where((x >= 0.0) & (x <= 1.0), 1.0, 0.0),
        pdf_deriv=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        support_end=1.0,
        inverse_cdf=lambda q: q)
    with pytest.raises(ValueError):
        gr.theory_coefficient(flat)


# ---------------------------------------------------------------------------
# the Monte Carlo study
# ---------------------------------------------------------------------------

def test_mc_jump_study_consistency():
    res = gr.mc_jump_study(gr.TRIANGULAR, 1000, 50, rng=np.random.default_rng(3))
    scale = 1000.0 ** (1.0 / 3.0)
    assert len(res.counts) == 50
    assert res.mean_coeff == res.counts.mean() / scale
    assert res.var_coeff == res.counts.var(ddof=1) / scale
    assert np.all(res.counts >= 1)
    assert np.all(res.counts <= 1000)


def test_mc_jump_study_reproducible():
    a = gr.mc_jump_study(gr.EXPONENTIAL, 500, 20, rng=np.random.default_rng(5))
    b = gr.mc_jump_study(gr.EXPONENTIAL, 500, 20, rng=np.random.default_rng(5))
    assert np.array_equal(a.counts, b.counts)


def test_mc_jump_study_needs_two_reps():
    with pytest.raises(ValueError):
        gr.mc_jump_study(gr.TRIANGULAR, 100, 1)


def test_mean_coeff_against_asymptote():
    # at n = 1000 the count statistic still sits a few percent below its
    # n -> infinity value; the band pins it near but not above the asymptote
    res = gr.mc_jump_study(gr.TRIANGULAR, 1000, 400, rng=np.random.default_rng(3))
    asym = golden.K1 * golden.TRI_COEFF
    assert 0.75 * asym < res.mean_coeff < 1.02 * asym

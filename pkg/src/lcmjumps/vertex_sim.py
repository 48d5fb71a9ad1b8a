"""Simulation of the stationary vertex jump process.

A path alternates waiting times (inverted from the integrated intensity
Phi) with jump lengths (rejection sampling in y = sqrt(length) space).
The hot loop lives in a compiled kernel when the extension built,
otherwise in a pure-Python twin; both consume the Generator through the
same buffered-draw protocol, so seeded runs are bit-identical either way.
"""
import math
import os
from dataclasses import dataclass

import numpy as np

from . import special_fns
from .errors import AccuracyError, EnvelopeViolation
from ._quad import trapz
from ._kernels_py import MAX_REJECTION_ROUNDS, _lin

if os.environ.get("LCMJUMPS_PURE"):
    from . import _kernels_py as _kernel_mod
else:
    try:
        from . import _kernels as _kernel_mod
    except ImportError:
        from . import _kernels_py as _kernel_mod

KERNEL_IMPL = _kernel_mod.KERNEL_NAME


def _frozen(a):
    a = np.ascontiguousarray(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SimTables:
    """Flat lookup tables consumed by the path kernel.

    phi/Phi share one grid (phi_x0, dx); the hazard inverse lives on a
    uniform grid in hazard units starting at hg0; q is tabulated on
    [0, y_max]; env_h / env_y are the per-cell rejection envelope height
    and support cut. fv0 feeds the initial-state sampler.
    """
    phi_x0: float
    dx: float
    phi_tab: np.ndarray
    Phi_tab: np.ndarray
    hg0: float
    h_step: float
    phiinv_tab: np.ndarray
    g_x0: float
    g_dx: float
    g_tab: np.ndarray
    q_dy: float
    q_tab: np.ndarray
    env_s0: float
    env_ds: float
    env_h: np.ndarray
    env_y: np.ndarray
    env_safety: float
    v0_half: float
    fv0_x0: float
    fv0_dx: float
    fv0_tab: np.ndarray
    fv0_cap: float

    def __post_init__(self):
        for name in ("phi_tab", "Phi_tab", "phiinv_tab", "g_tab", "q_tab",
                     "env_h", "env_y", "fv0_tab"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

    def as_kernel_args(self):
        return (self.phi_x0, 1.0 / self.dx, self.phi_tab, self.Phi_tab,
                self.hg0, 1.0 / self.h_step, self.phiinv_tab,
                self.g_x0, 1.0 / self.g_dx, self.g_tab,
                1.0 / self.q_dy, self.q_tab,
                self.env_s0, 1.0 / self.env_ds, self.env_h, self.env_y,
                self.env_safety)


def build_sim_tables(suite=None, y_max=3.9, y_step=1e-3, h_step=1e-3,
                     env_lo=-8.0, env_hi=3.6, env_ds=0.05,
                     env_safety=1.2, v0_half=3.5):
    """Build simulation tables from a function suite.

    The rejection envelope is certified at build time: on every grid cell
    the density mass beyond the tabulated support cut must be below 1e-8
    of the total, and the tabulated mass itself must be 1 to about 1e-3
    (trapezoid error included), else AccuracyError.  The envelope grid
    must sit inside the tabulated range of phi; states ever drifting
    below it carry probability around exp(Phi(env_lo)) per wait and hit
    the clamped leftmost cell.
    """
    if suite is None:
        suite = special_fns.default_suite()
    phi_t, Phi_t, g_t = suite.phi_table, suite.Phi_table, suite.g_table
    if v0_half > suite.x_max:
        raise ValueError("v0_half exceeds the tabulated range")
    if env_lo < phi_t.x0 or env_hi > phi_t.x_hi:
        raise ValueError("envelope grid exceeds the tabulated range")

    phi_xs = phi_t.x0 + phi_t.dx * np.arange(len(phi_t.values))
    g_xs = g_t.x0 + g_t.dx * np.arange(len(g_t.values))

    # waiting times: uniform grid in hazard units, x recovered by interp
    Phi_vals = Phi_t.values
    hg0 = float(Phi_vals[0])
    n_h = int(math.floor((Phi_vals[-1] - hg0) / h_step)) + 1
    hgrid = hg0 + h_step * np.arange(n_h)
    phiinv = np.interp(hgrid, Phi_vals, phi_xs)

    yq = np.arange(0.0, y_max + 0.5 * y_step, y_step)
    q_tab = special_fns._qfun_arr(yq)
    if not np.all(np.isfinite(q_tab)) or q_tab.min() < 0.0:
        raise AccuracyError("q table is not finite and nonnegative")

    # rejection envelope per state cell, scanned on a fine y grid
    sgrid = np.arange(env_lo, env_hi, env_ds)
    yy = np.linspace(1e-9, y_max, 1200)
    qv = np.interp(yy, yq, q_tab)
    env_h = np.empty(len(sgrid))
    env_y = np.empty(len(sgrid))
    for i, s in enumerate(sgrid):
        gs = np.interp(s, g_xs, g_t.values)
        ph = np.interp(s, phi_xs, phi_t.values)
        d = 4.0 * np.interp(s + yy * yy, g_xs, g_t.values, right=0.0) * qv \
            / (gs * ph)
        dmax = d.max()
        nz = np.nonzero(d > dmax * 1e-12)[0]
        cut = min(nz[-1] + 2, len(yy) - 1)
        env_h[i] = dmax
        env_y[i] = yy[cut]
        total = trapz(d, yy)
        tail = trapz(d[cut:], yy[cut:])
        if tail > 1e-8 * total:
            raise AccuracyError(
                f"envelope support cut at state {s:.3g} drops mass "
                f"{tail / total:.2e}")
        if abs(total - 1.0) > 1e-3:
            raise AccuracyError(
                f"jump density at state {s:.3g} integrates to {total:.6f}")

    xv = np.arange(-v0_half, v0_half + 0.5 * phi_t.dx, phi_t.dx)
    fv0_tab = suite.f_v0(xv)
    fv0_cap = 1.05 * float(fv0_tab.max())

    return SimTables(
        phi_x0=float(phi_t.x0), dx=float(phi_t.dx),
        phi_tab=phi_t.values, Phi_tab=Phi_vals,
        hg0=hg0, h_step=h_step, phiinv_tab=phiinv,
        g_x0=float(g_t.x0), g_dx=float(g_t.dx), g_tab=g_t.values,
        q_dy=y_step, q_tab=q_tab,
        env_s0=float(sgrid[0]), env_ds=env_ds, env_h=env_h, env_y=env_y,
        env_safety=env_safety,
        v0_half=v0_half, fv0_x0=float(xv[0]), fv0_dx=float(phi_t.dx),
        fv0_tab=fv0_tab, fv0_cap=fv0_cap)


_DEFAULT_TABLES = None


def default_tables():
    """Process-wide lazily built tables from the default suite."""
    global _DEFAULT_TABLES
    if _DEFAULT_TABLES is None:
        _DEFAULT_TABLES = build_sim_tables()
    return _DEFAULT_TABLES


# ---------------------------------------------------------------------------
# scalar samplers (shared by both kernels / used directly in tests)
# ---------------------------------------------------------------------------

def sample_v0(rng, tables=None):
    """Draw the initial location from f(x) = g(x) g(-x) / 2 by rejection
    against a uniform box on [-v0_half, v0_half]."""
    t = tables if tables is not None else default_tables()
    inv = 1.0 / t.fv0_dx
    for _ in range(MAX_REJECTION_ROUNDS):
        x = -t.v0_half + 2.0 * t.v0_half * rng.random()
        f = _lin(t.fv0_x0, inv, t.fv0_tab, x, False)
        if f > t.fv0_cap:
            raise EnvelopeViolation(
                f"initial density {f:.6g} exceeds cap {t.fv0_cap:.6g}")
        if rng.random() * t.fv0_cap <= f:
            return float(x)
    raise EnvelopeViolation("initial-state sampler stuck")


def _waiting(w, s, t):
    """Invert the hazard: wait u with Phi(s) - Phi(s - u) = w.

    Returns (wait, flagged); flagged means the hazard table was exhausted
    and the phi ~ 2 x^2 cubic tail supplied the inverse.
    """
    target = _lin(t.phi_x0, 1.0 / t.dx, t.Phi_tab, s, False) - w
    if target < t.hg0:
        t3 = 1.5 * (target - t.hg0) + t.phi_x0 ** 3
        tval = -(abs(t3) ** (1.0 / 3.0))
        return s - tval, True
    wait = s - _lin(t.hg0, 1.0 / t.h_step, t.phiinv_tab, target, False)
    if wait <= 0.0:
        wait = w / _lin(t.phi_x0, 1.0 / t.dx, t.phi_tab, s, False)
    return wait, False


def sample_waiting_time(rng, x_minus_a, tables=None):
    """Draw one waiting time from state s = x - a."""
    t = tables if tables is not None else default_tables()
    w = float(rng.standard_exponential())
    return float(_waiting(w, float(x_minus_a), t)[0])


def sample_jump(rng, x_minus_a, tables=None):
    """Draw one jump length from state s = x - a (rejection in y space)."""
    t = tables if tables is not None else default_tables()
    s = float(x_minus_a)
    n_env = len(t.env_h)
    i0 = min(max(int((s - t.env_s0) / t.env_ds), 0), n_env - 2)
    cap = t.env_safety * max(t.env_h[i0], t.env_h[i0 + 1])
    ym = max(t.env_y[i0], t.env_y[i0 + 1])
    inv_g = 1.0 / t.g_dx
    gs = _lin(t.g_x0, inv_g, t.g_tab, s, False)
    ph = _lin(t.phi_x0, 1.0 / t.dx, t.phi_tab, s, False)
    base = 4.0 / (gs * ph)
    for _ in range(MAX_REJECTION_ROUNDS):
        y = rng.random() * ym
        acc = rng.random()
        f = base * _lin(t.g_x0, inv_g, t.g_tab, s + y * y, True) \
            * _lin(0.0, 1.0 / t.q_dy, t.q_tab, y, False)
        if f > cap:
            raise EnvelopeViolation(
                f"jump density {f:.6g} exceeds envelope {cap:.6g} "
                f"at state {s:.6g}, y={y:.6g}")
        if acc * cap <= f:
            return float(y * y)
    raise EnvelopeViolation(f"rejection sampler stuck at state {s:.6g}")


def jump_density(s, y, tables=None):
    """Density of y = sqrt(jump length) from state s, as the kernel sees it:
    4 g(s + y^2) q(y) / (g(s) phi(s)) with table lookups."""
    t = tables if tables is not None else default_tables()
    y = np.asarray(y, dtype=float)
    g_xs = t.g_x0 + t.g_dx * np.arange(len(t.g_tab))
    phi_xs = t.phi_x0 + t.dx * np.arange(len(t.phi_tab))
    yq = t.q_dy * np.arange(len(t.q_tab))
    gs = np.interp(s, g_xs, t.g_tab)
    ph = np.interp(s, phi_xs, t.phi_tab)
    return 4.0 * np.interp(s + y * y, g_xs, t.g_tab, right=0.0) \
        * np.interp(y, yq, t.q_tab) / (gs * ph)


# ---------------------------------------------------------------------------
# paths and windowed counts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimConfig:
    """Run parameters for the count experiments."""
    horizon: float = 2000.0
    replications: int = 100
    window: float = 50.0
    seed: int = 0

    def __post_init__(self):
        if self.window < 1.0:
            raise ValueError("window must be at least 1")
        if self.horizon < 10.0 * self.window:
            raise ValueError("horizon must cover at least 10 windows")
        if self.replications < 1:
            raise ValueError("replications must be positive")


@dataclass(frozen=True)
class VertexPath:
    """One simulated path: jump epochs (strictly increasing) and the
    location after each jump, plus how many waits used the analytic
    hazard extension.

    Locations increase strictly in exact arithmetic, but the coordinate
    grows with the horizon while individual jumps can sit below its
    float resolution (the jump size density has an integrable 1/sqrt
    singularity at zero), so equal consecutive values do occur and the
    validation only requires non-decreasing.
    """
    v0: float
    times: np.ndarray
    locations: np.ndarray
    flagged_waits: int

    def __post_init__(self):
        object.__setattr__(self, "times", _frozen(self.times))
        object.__setattr__(self, "locations", _frozen(self.locations))
        if len(self.times) != len(self.locations):
            raise ValueError("times and locations differ in length")
        if len(self.times):
            t, x = self.times, self.locations
            if t[0] <= 0.0 or np.any(np.diff(t) <= 0.0):
                raise ValueError("jump epochs are not strictly increasing")
            if x[0] < self.v0 or np.any(np.diff(x) < 0.0):
                raise ValueError("locations decrease along the path")

    def __len__(self):
        return len(self.times)


def simulate_path(config, rng=None, tables=None):
    """Simulate one path on [0, horizon] from a stationary start."""
    t = tables if tables is not None else default_tables()
    if rng is None:
        rng = np.random.default_rng(config.seed)
    v0 = sample_v0(rng, t)
    times, locs, flagged = _kernel_mod.run_path(
        rng, v0, config.horizon, *t.as_kernel_args())
    return VertexPath(v0=v0, times=times, locations=locs,
                      flagged_waits=flagged)


@dataclass(frozen=True)
class CountStats:
    """Vertex counts in disjoint windows, pooled over replications."""
    window: float
    window_counts: np.ndarray
    mean_rate: float
    var_rate: float
    k1_se: float
    k2_se: float
    skewness: float
    excess_kurtosis: float
    n_windows: int
    n_flagged: int

    def __post_init__(self):
        counts = np.asarray(self.window_counts)
        counts.setflags(write=False)
        object.__setattr__(self, "window_counts", counts)


def estimate_rates(config, tables=None):
    """Run the full count experiment: one independent stream per
    replication, counts over disjoint windows of config.window."""
    t = tables if tables is not None else default_tables()
    nw = int(config.horizon // config.window)
    children = np.random.SeedSequence(config.seed).spawn(config.replications)
    all_counts = []
    n_flagged = 0
    for child in children:
        rng = np.random.default_rng(child)
        path = simulate_path(config, rng=rng, tables=t)
        idx = np.floor_divide(path.times, config.window).astype(np.int64)
        all_counts.append(np.bincount(idx[idx < nw], minlength=nw))
        n_flagged += path.flagged_waits
    counts = np.concatenate(all_counts).astype(np.int64)
    n = len(counts)
    mean_c = counts.mean()
    var_c = counts.var(ddof=1)
    z = counts - mean_c
    m2 = np.mean(z * z)
    skew = np.mean(z ** 3) / m2 ** 1.5
    exkurt = np.mean(z ** 4) / m2 ** 2 - 3.0
    return CountStats(
        window=config.window, window_counts=counts,
        mean_rate=mean_c / config.window,
        var_rate=var_c / config.window,
        k1_se=math.sqrt(var_c / n) / config.window,
        k2_se=var_c / config.window * math.sqrt(2.0 / (n - 1)),
        skewness=float(skew), excess_kurtosis=float(exkurt),
        n_windows=n, n_flagged=n_flagged)


def clt_check(stats, k1=2.10848, k2=1.029):
    """Standardize the window counts with the reference rates and report
    how close they sit to a unit normal."""
    c = stats.window_counts.astype(float)
    w = stats.window
    z = (c - k1 * w) / math.sqrt(k2 * w)
    zs = np.sort(z)
    n = len(zs)
    cdf = 0.5 * (1.0 + np.vectorize(math.erf)(zs / math.sqrt(2.0)))
    hi = np.arange(1, n + 1) / n - cdf
    lo = cdf - np.arange(0, n) / n
    d = z - z.mean()
    m2 = np.mean(d * d)
    return {
        "mean": float(z.mean()),
        "var": float(z.var(ddof=1)),
        "skew": float(np.mean(d ** 3) / m2 ** 1.5),
        "kurt": float(np.mean(d ** 4) / m2 ** 2 - 3.0),
        "ks": float(max(hi.max(), lo.max())),
        "n_windows": n,
    }

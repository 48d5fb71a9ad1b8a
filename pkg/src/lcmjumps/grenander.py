"""Jump counts of the Grenander estimator under decreasing densities.

The estimator's knots are the vertices of the least concave majorant of
the empirical CDF; their number grows like a constant times n^(1/3), and
the constant splits into a universal factor and a density functional
(the cube-root integral computed by theory_coefficient).
"""
import math
from dataclasses import dataclass

import numpy as np

from ._quad import integrate


@dataclass(frozen=True)
class DecreasingDensity:
    """A decreasing density on [0, support_end) with exact inverse CDF."""
    name: str
    pdf: callable
    pdf_deriv: callable
    support_end: float
    inverse_cdf: callable


def _tri_pdf(x):
    x = np.asarray(x, dtype=float)
    return np.where((x >= 0.0) & (x <= 1.0), 2.0 * (1.0 - x), 0.0)


def _tri_deriv(x):
    x = np.asarray(x, dtype=float)
    return np.where((x >= 0.0) & (x <= 1.0), -2.0, 0.0)


def _exp_pdf(x):
    x = np.asarray(x, dtype=float)
    return np.where(x >= 0.0, np.exp(-np.maximum(x, 0.0)), 0.0)


TRIANGULAR = DecreasingDensity(
    name="triangular", pdf=_tri_pdf, pdf_deriv=_tri_deriv,
    support_end=1.0, inverse_cdf=lambda q: 1.0 - np.sqrt(1.0 - q))

EXPONENTIAL = DecreasingDensity(
    name="exponential", pdf=_exp_pdf,
    pdf_deriv=lambda x: -_exp_pdf(x),
    support_end=math.inf, inverse_cdf=lambda q: -np.log1p(-q))

MODELS = {m.name: m for m in (TRIANGULAR, EXPONENTIAL)}


def sample_sorted(model, n, rng=None):
    """n sorted draws from the model via its inverse CDF."""
    if n < 1:
        raise ValueError("n must be positive")
    if rng is None:
        rng = np.random.default_rng()
    return np.sort(np.asarray(model.inverse_cdf(rng.random(n)), dtype=float))


@dataclass(frozen=True)
class ConcaveMajorant:
    """Vertices of a piecewise-linear concave majorant, slopes strictly
    decreasing between consecutive segments."""
    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        if len(x) != len(y) or len(x) == 0:
            raise ValueError("vertex arrays must be nonempty and equal length")
        if np.any(np.diff(x) <= 0.0):
            raise ValueError("vertex abscissas must be strictly increasing")

    @property
    def slopes(self):
        return np.diff(self.y) / np.diff(self.x)

    @property
    def n_segments(self):
        return len(self.x) - 1

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if np.any(t < self.x[0]) or np.any(t > self.x[-1]):
            raise ValueError("evaluation outside the majorant domain")
        return np.interp(t, self.x, self.y)


def lcm_empirical(sample):
    """Least concave majorant of the empirical CDF of a sample on [0, inf).

    The input need not be sorted. Vertices are returned in order starting
    at (0, 0); tied sample values collapse to the highest empirical-CDF
    ordinate before the hull pass.
    """
    sample = np.asarray(sample, dtype=float)
    if sample.ndim != 1 or len(sample) == 0:
        raise ValueError("sample must be a nonempty 1-d array")
    if np.any(sample < 0.0):
        raise ValueError("sample values must be nonnegative")
    n = len(sample)
    xs = np.concatenate(([0.0], np.sort(sample)))
    ys = np.arange(n + 1) / n
    keep = np.nonzero(np.diff(xs, append=np.inf) > 0.0)[0]
    xs, ys = xs[keep], ys[keep]

    hx, hy = [], []
    for xi, yi in zip(xs.tolist(), ys.tolist()):
        while len(hx) >= 2:
            cross = (hx[-1] - hx[-2]) * (yi - hy[-2]) \
                - (hy[-1] - hy[-2]) * (xi - hx[-2])
            if cross >= 0.0:
                hx.pop()
                hy.pop()
            else:
                break
        hx.append(xi)
        hy.append(yi)
    return ConcaveMajorant(x=np.array(hx), y=np.array(hy))


def grenander_jump_count(sample):
    """Number of slope segments of the Grenander estimator, i.e. majorant
    vertices past the origin."""
    return lcm_empirical(sample).n_segments


def theory_coefficient(model):
    """Cube-root jump-rate functional: integral of
    (f'(x)^2 / (4 f(x)))^(1/3) over the support.

    Finite supports get dyadically graded panels toward the endpoint
    (the integrand typically blows up like a negative power there);
    infinite supports get uniform panels plus a fitted exponential tail.
    """
    end = model.support_end
    probe = np.linspace(0.0, min(end, 10.0), 41)[1:-1]
    if np.allclose(model.pdf_deriv(probe), 0.0):
        raise ValueError("flat density: the cube-root functional vanishes")

    def h(x):
        return (model.pdf_deriv(x) ** 2 / (4.0 * model.pdf(x))) ** (1.0 / 3.0)

    if math.isfinite(end):
        # halving stops at 2^-50: beyond that 1 - 2^-k rounds to 1 and the
        # dropped sliver is ~1e-10 for any integrable power blow-up
        edges = end * (1.0 - 2.0 ** -np.arange(51.0))
        return float(integrate(h, edges, n=20))
    edges = np.arange(0.0, 86.0, 2.0)
    total = float(integrate(h, edges, n=20))
    ha, hb = float(h(edges[-2])), float(h(edges[-1]))
    if not 0.0 < hb < ha:
        raise ValueError("integrand does not decay on the tail")
    lam = math.log(ha / hb) / (edges[-1] - edges[-2])
    return total + hb / lam


@dataclass(frozen=True)
class JumpStudyResult:
    """Monte Carlo jump counts rescaled by n^(1/3)."""
    model: str
    n: int
    reps: int
    counts: np.ndarray
    mean_coeff: float
    mean_se: float
    var_coeff: float
    var_se: float


def mc_jump_study(model, n, reps, rng=None):
    """reps independent jump counts at sample size n, with the mean and
    variance coefficients mean/n^(1/3) and var/n^(1/3)."""
    if reps < 2:
        raise ValueError("reps must be at least 2")
    if rng is None:
        rng = np.random.default_rng()
    counts = np.empty(reps, dtype=np.int64)
    for r in range(reps):
        counts[r] = grenander_jump_count(sample_sorted(model, n, rng))
    scale = n ** (1.0 / 3.0)
    mean_c = counts.mean() / scale
    sd = counts.std(ddof=1)
    var_c = sd * sd / scale
    counts.setflags(write=False)
    return JumpStudyResult(
        model=model.name, n=n, reps=reps, counts=counts,
        mean_coeff=float(mean_c), mean_se=float(sd / math.sqrt(reps) / scale),
        var_coeff=float(var_c),
        var_se=float(var_c * math.sqrt(2.0 / (reps - 1))))

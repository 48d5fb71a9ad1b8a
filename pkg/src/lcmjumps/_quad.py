"""Composite Gauss-Legendre panels with a cheap a-posteriori error estimate.

All integrands in this package are smooth after the substitutions applied by
the callers, so fixed-order panels converge fast and comparing two orders
gives a usable error estimate without adaptive machinery.
"""
import numpy as np

# numpy 2 renamed trapz; keep one spelling for every table integral here
trapz = getattr(np, "trapezoid", None) or np.trapz

_RULES: dict = {}


def gl_rule(n):
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]."""
    if n not in _RULES:
        _RULES[n] = np.polynomial.legendre.leggauss(n)
    return _RULES[n]


def panel_nodes(edges, n):
    """Flattened nodes and weights for n-point GL on each panel.

    Parameters
    ----------
    edges : array_like
        Increasing panel boundaries, length m+1 for m panels.
    n : int
        Points per panel.

    Returns
    -------
    nodes, weights : ndarray
        Concatenated over panels; sum(weights * f(nodes)) approximates the
        integral over [edges[0], edges[-1]].
    """
    edges = np.asarray(edges, dtype=float)
    x, w = gl_rule(n)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def integrate(f, edges, n=20, estimate=False):
    """Integrate a vectorized callable over GL panels.

    With estimate=True also evaluates a lower-order rule on the same panels
    and returns (value, |value - value_lower|) as a Richardson-style error
    estimate.
    """
    xs, ws = panel_nodes(edges, n)
    val = float(np.sum(ws * f(xs)))
    if not estimate:
        return val
    nlo = max(4, n - 6)
    xl, wl = panel_nodes(edges, nlo)
    lo = float(np.sum(wl * f(xl)))
    return val, abs(val - lo)

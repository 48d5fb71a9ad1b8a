"""Airy function Ai and Ai' on the complex plane, plus its negative real zeros.

From-scratch double-precision engine: a Maclaurin series with compensated
summation inside |z| < 6, asymptotic expansions outside (right sector,
negative real axis, and a single application of the rotation connection
formula for the left sectors). Zeros are seeded by the McMahon asymptotic
and polished with a safeguarded Newton iteration.
"""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError

AI_ZERO = 0.3550280538878172     # Ai(0)  = 3^(-2/3)/Gamma(2/3)
AIP_ZERO = -0.2588194037928068   # Ai'(0) = -3^(-1/3)/Gamma(1/3)

EVAL_RADIUS = 50.0
SWITCH_RADIUS = 6.0
STOKES_RADIUS = 7.0
MAX_ZEROS = 200

_SQRTPI = math.sqrt(math.pi)
_OMEGA = cmath.exp(2j * math.pi / 3.0)


def _series(z):
    """Maclaurin (Ai, Ai') via the four term recurrences, Kahan-compensated."""
    z3 = z * z * z
    f = 1.0 + 0j; cf = 0j; t = 1.0 + 0j
    g = z + 0j;   cg = 0j; s = z + 0j
    fp = 0j;      cfp = 0j; ft = 0j
    gp = 1.0 + 0j; cgp = 0j; gt = 1.0 + 0j
    for k in range(140):
        t = t * z3 / ((3 * k + 2) * (3 * k + 3))
        s = s * z3 / ((3 * k + 3) * (3 * k + 4))
        ft = z * z / 2.0 if k == 0 else ft * z3 / ((3 * k) * (3 * k + 2))
        gt = gt * z3 / ((3 * k + 1) * (3 * k + 3))
        y = t - cf; hi = f + y; cf = (hi - f) - y; f = hi
        y = s - cg; hi = g + y; cg = (hi - g) - y; g = hi
        y = ft - cfp; hi = fp + y; cfp = (hi - fp) - y; fp = hi
        y = gt - cgp; hi = gp + y; cgp = (hi - gp) - y; gp = hi
        if abs(t) + abs(s) + abs(ft) + abs(gt) < 1e-20 * (abs(f) + abs(g) + 1.0):
            break
    return AI_ZERO * f + AIP_ZERO * g, AI_ZERO * fp + AIP_ZERO * gp


def _asym_coeffs(nmax=40):
    u = [1.0]
    v = [1.0]
    for k in range(1, nmax):
        uk = u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        u.append(uk)
        v.append(uk * (6 * k + 1) / (1 - 6 * k))
    return u, v


_U, _V = _asym_coeffs()


def _asym_right(z):
    """Decaying expansion for |arg z| <= 2pi/3, truncated at the smallest term."""
    zeta = (2.0 / 3.0) * z * cmath.sqrt(z)
    su = 1.0 + 0j
    sv = 1.0 + 0j
    invz = 1.0 / zeta
    pw = 1.0 + 0j
    prev = 1.0
    for k in range(1, len(_U)):
        pw = pw * invz
        tu = _U[k] * pw * (-1) ** k
        if abs(tu) > prev:
            break
        su += tu
        sv += _V[k] * pw * (-1) ** k
        prev = abs(tu)
    pref = cmath.exp(-zeta) / (2.0 * _SQRTPI * z ** 0.25)
    return pref * su, -(z ** 0.25) * cmath.exp(-zeta) / (2.0 * _SQRTPI) * sv


def _asym_negreal(x):
    """Oscillatory expansion at z = -x, x > 0, even/odd coefficient splits."""
    xi = (2.0 / 3.0) * x * math.sqrt(x)
    c = math.cos(xi - 0.25 * math.pi)
    s = math.sin(xi - 0.25 * math.pi)
    inv2 = 1.0 / (xi * xi)

    def split(cs):
        ev = 1.0
        prev = 1.0
        k = 1
        while 2 * k < len(cs):
            t = cs[2 * k] * inv2 ** k * (-1) ** k
            if abs(t) > prev:
                break
            ev += t
            prev = abs(t)
            k += 1
        od = cs[1] / xi
        prev = abs(od)
        k = 1
        while 2 * k + 1 < len(cs):
            t = cs[2 * k + 1] * inv2 ** k / xi * (-1) ** k
            if abs(t) > prev:
                break
            od += t
            prev = abs(t)
            k += 1
        return ev, od

    ue, uo = split(_U)
    ve, vo = split(_V)
    ai = (c * ue + s * uo) / (_SQRTPI * x ** 0.25)
    aip = (x ** 0.25) / _SQRTPI * (s * ve - c * vo)
    return complex(ai), complex(aip)


def _eval(z):
    """(Ai(z), Ai'(z)) anywhere; no domain gate. Internal."""
    z = complex(z)
    if abs(z) < SWITCH_RADIUS:
        return _series(z)
    # Near arg z = +-2pi/3 the one-exponential expansions bottom out at the
    # size of the dropped recessive term, exp(-4/3 |z|^{3/2}), which is still
    # ~1e-9 at |z| = 6. The power series stays well conditioned along those
    # rays (Ai grows there like its largest term), so it covers the gap.
    if (abs(z) < STOKES_RADIUS
            and abs(abs(cmath.phase(z)) - 2.0 * math.pi / 3.0) < math.pi / 4.0):
        return _series(z)
    if z.imag == 0.0 and z.real < 0.0:
        return _asym_negreal(-z.real)
    if abs(cmath.phase(z)) <= 2.0 * math.pi / 3.0:
        return _asym_right(z)
    # left sectors: one application of Ai(z) = -(Ai(z/w)/w + Ai(zw) w), w = e^{2pi i/3};
    # both rotated arguments land in the right sector.
    am, apm = _asym_right(z / _OMEGA)
    ap_, app = _asym_right(z * _OMEGA)
    return -(am / _OMEGA + ap_ * _OMEGA), -(apm / _OMEGA ** 2 + app * _OMEGA ** 2)


def _checked(z, which):
    z = complex(z)
    if abs(z) > EVAL_RADIUS:
        raise ValueError(f"|z| = {abs(z):.3g} outside the evaluation domain |z| <= {EVAL_RADIUS:g}")
    ai, aip = _eval(z)
    out = ai if which == 0 else aip
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise AccuracyError(f"non-finite Airy value at z = {z!r}")
    return out


def airy_ai(z):
    """Airy function Ai(z) for complex z with |z| <= 50.

    Parameters
    ----------
    z : complex or float

    Returns
    -------
    complex

    Raises
    ------
    ValueError
        If |z| exceeds the evaluation domain.
    """
    return _checked(z, 0)


def airy_ai_prime(z):
    """Derivative Ai'(z) for complex z with |z| <= 50. Same contract as airy_ai."""
    return _checked(z, 1)


@dataclass(frozen=True)
class AiryZeroTable:
    """Negative real zeros of Ai, ordered a_1 > a_2 > ..., with Ai'(a_n).

    Immutable after construction; safe to share between threads.
    """
    zeros: np.ndarray
    derivs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "zeros", np.asarray(self.zeros, dtype=float))
        object.__setattr__(self, "derivs", np.asarray(self.derivs, dtype=float))
        self.zeros.setflags(write=False)
        self.derivs.setflags(write=False)

    def __len__(self):
        return len(self.zeros)


def mcmahon_seed(n):
    """McMahon-type asymptotic for the n-th negative zero of Ai (n >= 1)."""
    t = 3.0 * math.pi * (4 * n - 1) / 8.0
    return -(t ** (2.0 / 3.0))


def airy_zeros(n_max):
    """First n_max negative zeros of Ai with derivatives at the refined points.

    Each zero starts from the McMahon seed and is polished by Newton steps
    clamped to stay inside the seed's bracket (the zeros are separated by
    more than 1, the seed is within 0.02 for every n, so the clamp can never
    capture a neighbor).

    Parameters
    ----------
    n_max : int
        Number of zeros, 1 <= n_max <= 200.

    Returns
    -------
    AiryZeroTable

    Raises
    ------
    ValueError
        On n_max out of range.
    AccuracyError
        If Newton fails to converge for some index (reported per index).
    """
    if not 1 <= n_max <= MAX_ZEROS:
        raise ValueError(f"n_max must be in [1, {MAX_ZEROS}], got {n_max}")
    zeros = np.empty(n_max)
    derivs = np.empty(n_max)
    for n in range(1, n_max + 1):
        seed = mcmahon_seed(n)
        x = seed
        converged = False
        for _ in range(60):
            a, ap = _eval(x)
            step = a.real / ap.real
            if abs(step) > 0.3:
                step = math.copysign(0.3, step)
            x -= step
            if abs(x - seed) > 0.5:  # safeguard: never leave the seed's basin
                x = seed + math.copysign(0.4, x - seed)
            if abs(step) < 1e-14 * abs(x):
                converged = True
                break
        resid = abs(_eval(x)[0].real)
        if not converged or resid > 1e-10:
            raise AccuracyError(
                f"zero {n}: Newton did not converge (residual {resid:.2e})")
        zeros[n - 1] = x
        derivs[n - 1] = _eval(x)[1].real
    return AiryZeroTable(zeros=zeros, derivs=derivs)

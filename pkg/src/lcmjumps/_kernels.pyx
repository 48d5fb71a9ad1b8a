# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled path kernel; mirrors _kernels_py.py statement for statement.

The RNG is consumed through the same buffered-draw protocol as the Python
kernel (exponential blocks of 256, uniform pairs from blocks of 512), so
both produce bit-identical paths from the same Generator state.
"""
import numpy as np

from .errors import EnvelopeViolation

KERNEL_NAME = "compiled"

cdef Py_ssize_t EXP_CHUNK = 256
cdef Py_ssize_t UNI_CHUNK = 512
cdef int MAX_REJECTION_ROUNDS = 10000

from libc.math cimport fabs, pow


cdef inline double _lin(double x0, double inv_dx, const double[::1] tab,
                        double x, bint zero_beyond):
    cdef double pos = (x - x0) * inv_dx
    cdef Py_ssize_t n = tab.shape[0]
    cdef Py_ssize_t i
    cdef double fr
    if pos <= 0.0:
        return tab[0]
    if pos >= n - 1:
        return 0.0 if zero_beyond else tab[n - 1]
    i = <Py_ssize_t> pos
    fr = pos - i
    return tab[i] + (tab[i + 1] - tab[i]) * fr


def run_path(object rng, double v0, double horizon,
             double phi_x0, double inv_dx,
             const double[::1] phi_tab, const double[::1] Phi_tab,
             double hg0, double inv_hstep, const double[::1] phiinv_tab,
             double g_x0, double inv_gdx, const double[::1] g_tab,
             double inv_qdy, const double[::1] q_tab,
             double env_s0, double inv_envds,
             const double[::1] env_h, const double[::1] env_y,
             double env_safety):
    """Alternate waiting times and jumps from a = 0 until a > horizon.

    Returns (times, locations, n_flagged), matching the Python kernel
    bit for bit.
    """
    cdef double x = v0
    cdef double a = 0.0
    cdef double xlo3 = phi_x0 * phi_x0 * phi_x0
    cdef Py_ssize_t n_env = env_h.shape[0]
    cdef int flagged = 0

    cdef Py_ssize_t cap_ev = 8192
    times_arr = np.empty(cap_ev)
    locs_arr = np.empty(cap_ev)
    cdef double[::1] times = times_arr
    cdef double[::1] locs = locs_arr
    cdef Py_ssize_t n_ev = 0

    cdef double[::1] exp_buf = None
    cdef Py_ssize_t exp_i = EXP_CHUNK
    cdef double[::1] uni_buf = None
    cdef Py_ssize_t uni_i = UNI_CHUNK

    cdef double s, w, target, t3, tval, wait
    cdef double env_cap, cap, ym, gs, ph, base, y, acc, f, jump
    cdef Py_ssize_t i0, r

    while True:
        s = x - a
        if exp_i >= EXP_CHUNK:
            exp_buf = rng.standard_exponential(EXP_CHUNK)
            exp_i = 0
        w = exp_buf[exp_i]
        exp_i += 1

        target = _lin(phi_x0, inv_dx, Phi_tab, s, False) - w
        if target < hg0:
            # hazard table exhausted: invert the phi ~ 2 t^2 cubic tail
            t3 = 1.5 * (target - hg0) + xlo3
            tval = -pow(fabs(t3), 1.0 / 3.0)
            wait = s - tval
            flagged += 1
        else:
            wait = s - _lin(hg0, inv_hstep, phiinv_tab, target, False)
            if wait <= 0.0:
                wait = w / _lin(phi_x0, inv_dx, phi_tab, s, False)
        a = a + wait
        if a > horizon:
            break

        s = x - a
        i0 = <Py_ssize_t> ((s - env_s0) * inv_envds)
        if i0 < 0:
            i0 = 0
        elif i0 > n_env - 2:
            i0 = n_env - 2
        env_cap = env_h[i0] if env_h[i0] >= env_h[i0 + 1] else env_h[i0 + 1]
        cap = env_safety * env_cap
        ym = env_y[i0] if env_y[i0] >= env_y[i0 + 1] else env_y[i0 + 1]
        gs = _lin(g_x0, inv_gdx, g_tab, s, False)
        ph = _lin(phi_x0, inv_dx, phi_tab, s, False)
        base = 4.0 / (gs * ph)

        jump = -1.0
        for r in range(MAX_REJECTION_ROUNDS):
            if uni_i + 2 > UNI_CHUNK:
                uni_buf = rng.random(UNI_CHUNK)
                uni_i = 0
            y = uni_buf[uni_i] * ym
            acc = uni_buf[uni_i + 1]
            uni_i += 2
            f = base * _lin(g_x0, inv_gdx, g_tab, s + y * y, True) \
                * _lin(0.0, inv_qdy, q_tab, y, False)
            if f > cap:
                raise EnvelopeViolation(
                    f"jump density {f:.6g} exceeds envelope {cap:.6g} "
                    f"at state {s:.6g}, y={y:.6g}")
            if acc * cap <= f:
                jump = y * y
                break
        if jump < 0.0:
            raise EnvelopeViolation(f"rejection sampler stuck at state {s:.6g}")

        x = x + jump
        if n_ev >= cap_ev:
            cap_ev = cap_ev * 2
            new_times = np.empty(cap_ev)
            new_locs = np.empty(cap_ev)
            new_times[:n_ev] = times_arr[:n_ev]
            new_locs[:n_ev] = locs_arr[:n_ev]
            times_arr = new_times
            locs_arr = new_locs
            times = times_arr
            locs = locs_arr
        times[n_ev] = a
        locs[n_ev] = x
        n_ev += 1

    return times_arr[:n_ev].copy(), locs_arr[:n_ev].copy(), flagged

"""Pure-Python path kernel; the compiled twin in _kernels.pyx mirrors this
file statement for statement.

Both implementations consume the RNG through identical buffered draws
(standard_exponential in blocks of 256, uniform pairs from blocks of 512),
so a given Generator state produces bit-identical paths under either kernel.
"""
import numpy as np

from .errors import EnvelopeViolation

KERNEL_NAME = "python"

EXP_CHUNK = 256
UNI_CHUNK = 512
MAX_REJECTION_ROUNDS = 10000


def _lin(x0, inv_dx, tab, x, zero_beyond):
    pos = (x - x0) * inv_dx
    n = len(tab)
    if pos <= 0.0:
        return tab[0]
    if pos >= n - 1:
        return 0.0 if zero_beyond else tab[n - 1]
    i = int(pos)
    fr = pos - i
    return tab[i] + (tab[i + 1] - tab[i]) * fr


def run_path(rng, v0, horizon,
             phi_x0, inv_dx, phi_tab, Phi_tab,
             hg0, inv_hstep, phiinv_tab,
             g_x0, inv_gdx, g_tab,
             inv_qdy, q_tab,
             env_s0, inv_envds, env_h, env_y, env_safety):
    """Alternate waiting times and jumps from a = 0 until a > horizon.

    Returns (times, locations, n_flagged): the jump epochs, the location
    after each jump, and how many waits needed the analytic hazard
    extension beyond the tabulated range.
    """
    x = float(v0)
    a = 0.0
    xlo3 = phi_x0 * phi_x0 * phi_x0
    n_env = len(env_h)
    times = []
    locs = []
    flagged = 0

    exp_buf = None
    exp_i = EXP_CHUNK
    uni_buf = None
    uni_i = UNI_CHUNK

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
            tval = -(abs(t3) ** (1.0 / 3.0))
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
        i0 = int((s - env_s0) * inv_envds)
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
        for _ in range(MAX_REJECTION_ROUNDS):
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
        times.append(a)
        locs.append(x)

    return np.array(times), np.array(locs), flagged

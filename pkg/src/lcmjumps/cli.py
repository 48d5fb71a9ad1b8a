"""Command-line front end.

Subcommands: constants, tabulate, simulate, grenander, selftest.
Exit codes: 0 success, 2 golden-check failure, 64 usage error,
70 internal numerical failure (envelope violation, tail-bound breach).
Every output document carries a run manifest (command, full config,
seed, tool version, duration); seeded commands replay bit-identically.
"""
import argparse
import hashlib
import json
import math
import os
import sys
import time

import numpy as np

from . import __version__, airy, constants, grenander, special_fns, vertex_sim
from .errors import AccuracyError, EnvelopeViolation
from ._quad import trapz

SUITE_CACHE_VERSION = 1


class _Parser(argparse.ArgumentParser):
    """argparse with the sysexits usage code instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


class _UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# suite cache
# ---------------------------------------------------------------------------

def cache_dir():
    base = os.environ.get("XDG_CACHE_HOME")
    if not base:
        base = os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "lcmjumps")


def _suite_params(x_max, dx, n_zeros, t_switch, g_lo, g_hi):
    return {"version": SUITE_CACHE_VERSION, "x_max": x_max, "dx": dx,
            "n_zeros": n_zeros, "t_switch": t_switch,
            "g_lo": g_lo, "g_hi": g_hi}


def suite_cache_path(params):
    key = hashlib.sha256(
        json.dumps(params, sort_keys=True).encode()).hexdigest()[:16]
    return os.path.join(cache_dir(),
                        f"suite-v{SUITE_CACHE_VERSION}-{key}.npz")


def load_or_build_suite(x_max=8.0, dx=1e-3, n_zeros=200, t_switch=1.0,
                        g_lo=-12.0, g_hi=10.0, refresh=False):
    """Return the function suite, from the parameter-keyed cache when a
    matching file exists, rebuilding (and rewriting the cache) otherwise.

    Cached arrays are trusted as-is; a corrupted cache surfaces through
    the route-agreement checks of `constants`, not here.
    """
    params = _suite_params(x_max, dx, n_zeros, t_switch, g_lo, g_hi)
    path = suite_cache_path(params)
    if not refresh and os.path.exists(path):
        try:
            with np.load(path, allow_pickle=False) as z:
                stored = json.loads(str(z["params_json"]))
                if stored == params:
                    return _suite_from_arrays(z["g"].copy(), z["phi"].copy(),
                                              z["Phi"].copy(), params, path)
        except (OSError, KeyError, ValueError):
            pass
    suite = special_fns.build_suite(x_max=x_max, dx=dx, n_zeros=n_zeros,
                                    t_switch=t_switch, g_lo=g_lo, g_hi=g_hi)
    os.makedirs(cache_dir(), exist_ok=True)
    np.savez(path,
             g=suite.g_table.values, phi=suite.phi_table.values,
             Phi=suite.Phi_table.values,
             params_json=json.dumps(params, sort_keys=True))
    return suite


def _suite_from_arrays(g_vals, phi_vals, Phi_vals, params, path):
    dx = params["dx"]
    return special_fns.CoreFnSuite(
        g_table=special_fns.InterpolatedFn(params["g_lo"], dx, g_vals),
        phi_table=special_fns.InterpolatedFn(-params["x_max"], dx, phi_vals),
        Phi_table=special_fns.InterpolatedFn(-params["x_max"], dx, Phi_vals),
        coeffs=special_fns._coeffs(40),
        zeros=special_fns._zero_table(params["n_zeros"]),
        x_max=params["x_max"], dx=dx, t_switch=params["t_switch"],
        diagnostics={"cache": path})


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------

def _manifest(command, config, seed, t0):
    return {"command": command, "config": config, "seed": seed,
            "tool_version": __version__,
            "duration_s": round(time.monotonic() - t0, 3)}


def _write_text(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(doc, out):
    _write_text(json.dumps(doc, indent=2) + "\n", out)


def _emit_csv(header, rows, out, manifest):
    lines = [header]
    lines.extend(",".join(f"{v:.17g}" if isinstance(v, float) else str(v)
                          for v in row) for row in rows)
    _write_text("\n".join(lines) + "\n", out)
    if out:
        _emit_json({"manifest": manifest}, out + ".manifest.json")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_constants(args):
    t0 = time.monotonic()
    suite = load_or_build_suite()
    k1, k1_est = constants.k1_airy(estimate=True)
    ev, ev_est = constants.ev0_sq(estimate=True)
    kd, kd_est = constants.k1_double_integral(estimate=True)
    failures = []
    if abs(k1 - 8.0 * ev) >= 1e-4:
        failures.append(f"k1_airy vs 8*ev0_sq differ by {abs(k1 - 8 * ev):.2e}")
    if abs(k1 - kd) >= 5e-3:
        failures.append(f"k1_airy vs k1_double differ by {abs(k1 - kd):.2e}")
    two_int = k2a = None
    if not args.skip_covariance:
        rec = constants.covariance_kernel(suite=suite)
        two_int = rec["two_int_cov"]
        k2a = rec["k2_analytic"]
        if not -1.3 <= two_int <= -0.9:
            failures.append(f"two_int_cov {two_int:.5f} outside [-1.3, -0.9]")
    doc = {
        "k1_airy": k1, "k1_double": kd, "ev0_sq": ev,
        "e_max": constants.e_max(),
        "two_int_cov": two_int, "k2_analytic": k2a,
        "error_estimates": {"k1_airy": k1_est, "k1_double": kd_est,
                            "ev0_sq": ev_est},
        "manifest": _manifest(
            "constants", {"skip_covariance": args.skip_covariance},
            args.seed, t0),
    }
    _emit_json(doc, args.out)
    for msg in failures:
        print(f"golden check failed: {msg}", file=sys.stderr)
    return 2 if failures else 0


_TAB_DEFAULTS = {"g": (-4.0, 4.0), "p": (0.05, 4.0), "phi": (-4.0, 4.0),
                 "Phi": (-4.0, 4.0), "fv0": (-3.5, 3.5), "u2": (-2.0, 3.2)}


def cmd_tabulate(args):
    t0 = time.monotonic()
    lo, hi = _TAB_DEFAULTS[args.fn]
    if args.table_range:
        try:
            lo, hi = (float(s) for s in args.table_range.split(":"))
        except ValueError:
            raise _UsageError(f"bad --table-range {args.table_range!r}, "
                              "expected LO:HI")
    if args.lo is not None:
        lo = args.lo
    if args.hi is not None:
        hi = args.hi
    step = args.step if args.step is not None else args.table_step
    if step is None:
        step = 0.01
    if step <= 0.0:
        raise _UsageError(f"step must be positive, got {step:g}")
    if hi < lo:
        raise _UsageError(f"empty range [{lo:g}, {hi:g}]")
    if args.transform and args.fn != "p":
        raise _UsageError("--transform applies to fn 'p' only")
    xs = lo + step * np.arange(int(round((hi - lo) / step)) + 1)
    xs = xs[xs <= hi + 1e-12 * max(1.0, abs(hi))]

    suite = load_or_build_suite()
    try:
        if args.fn == "g":
            vals = suite.g(xs)
        elif args.fn == "phi":
            vals = suite.phi(xs)
        elif args.fn == "Phi":
            vals = suite.Phi(xs)
        elif args.fn == "fv0":
            vals = suite.f_v0(xs)
        elif args.fn == "u2":
            vals = np.array([special_fns.u2(float(x)) for x in xs])
        elif args.transform == "u32":
            if lo < 0.0:
                raise ValueError("u^{3/2} p(u) needs u >= 0")
            vals = np.array([special_fns.qfun(math.sqrt(float(x)))
                             for x in xs])
        else:
            vals = np.array([special_fns.p(float(x)) for x in xs])
    except ValueError as exc:
        raise _UsageError(str(exc))

    config = {"fn": args.fn, "from": float(xs[0]), "to": float(xs[-1]),
              "step": step, "transform": args.transform}
    manifest = _manifest("tabulate", config, args.seed, t0)
    if args.json:
        _emit_json({"fn": args.fn, "x": [float(v) for v in xs],
                    "value": [float(v) for v in vals],
                    "manifest": manifest}, args.out)
    else:
        _emit_csv("x,value",
                  [(float(x), float(v)) for x, v in zip(xs, vals)],
                  args.out, manifest)
    return 0


def cmd_simulate(args):
    t0 = time.monotonic()
    suite = load_or_build_suite()
    tables = vertex_sim.build_sim_tables(suite=suite)
    try:
        config = vertex_sim.SimConfig(horizon=args.horizon,
                                      replications=args.reps,
                                      window=args.window, seed=args.seed)
    except ValueError as exc:
        raise _UsageError(str(exc))
    stats = vertex_sim.estimate_rates(config, tables=tables)
    clt = vertex_sim.clt_check(stats)
    cfg = {"horizon": config.horizon, "reps": config.replications,
           "window": config.window, "seed": config.seed,
           "kernel": vertex_sim.KERNEL_IMPL}
    manifest = _manifest("simulate", cfg, config.seed, t0)
    doc = {
        "k1_hat": stats.mean_rate, "k1_se": stats.k1_se,
        "k2_hat": stats.var_rate, "k2_se": stats.k2_se,
        "clt": {"mean": clt["mean"], "var": clt["var"],
                "skew": clt["skew"], "kurt": clt["kurt"]},
        "n_windows": stats.n_windows, "n_flagged": stats.n_flagged,
        "manifest": manifest,
    }
    _emit_json(doc, args.out)
    if args.csv:
        _emit_csv("window_index,count",
                  list(enumerate(stats.window_counts.tolist())),
                  args.csv, manifest)
    return 0


def cmd_grenander(args):
    t0 = time.monotonic()
    if args.n < 1 or args.reps < 2:
        raise _UsageError("need n >= 1 and reps >= 2")
    model = grenander.MODELS[args.model]
    rng = np.random.default_rng(args.seed)
    res = grenander.mc_jump_study(model, args.n, args.reps, rng=rng)
    cfg = {"model": args.model, "n": args.n, "reps": args.reps,
           "seed": args.seed}
    manifest = _manifest("grenander", cfg, args.seed, t0)
    doc = {
        "model": res.model, "n": res.n, "reps": res.reps,
        "mean_coeff": res.mean_coeff, "mean_se": res.mean_se,
        "var_coeff": res.var_coeff, "var_se": res.var_se,
        "theory_mean_coeff":
            constants.K1_REFERENCE * grenander.theory_coefficient(model),
        "manifest": manifest,
    }
    _emit_json(doc, args.out)
    if args.csv:
        _emit_csv("replication,count",
                  list(enumerate(res.counts.tolist())), args.csv, manifest)
    return 0


# ---------------------------------------------------------------------------
# selftest
# ---------------------------------------------------------------------------

def _hull_brute(xs, ys):
    """Upper hull by max-slope marching; exact reference for small n."""
    verts = [0]
    i = 0
    while i < len(xs) - 1:
        slopes = (ys[i + 1:] - ys[i]) / (xs[i + 1:] - xs[i])
        top = slopes.max()
        i = i + 1 + int(np.nonzero(slopes == top)[0][-1])
        verts.append(i)
    return verts


def _selftest_checks(quick):
    """Yield (name, ok, detail) for the invariant suite."""
    suite = load_or_build_suite()
    sqrt2pi = math.sqrt(2.0 * math.pi)

    d = abs(airy.airy_ai(0.0) - airy.AI_ZERO) \
        + abs(airy.airy_ai_prime(0.0) - airy.AIP_ZERO)
    yield "airy_at_zero", d < 1e-14, f"dev {d:.1e}"

    ref = 0.060458308371838146 - 0.15188956587718141j
    d = abs(airy.airy_ai(1 + 1j) - ref) / abs(ref)
    yield "airy_spot_1+1j", d < 1e-10, f"rel dev {d:.1e}"

    zt = airy.airy_zeros(2)
    d = max(abs(zt.zeros[0] + 2.338107410459767),
            abs(zt.zeros[1] + 4.087949444130971))
    yield "airy_zeros", d < 1e-10, f"dev {d:.1e}"

    co = special_fns.tilde_p_coeffs(4)
    d = max(abs(co.c[1] - 3.0 / 16.0), abs(co.a[1] - 7.0 / 48.0),
            abs(co.b[2] - 4.0 / 189.0))
    yield "series_coefficients", d < 1e-12, f"dev {d:.1e}"

    lo, hi = special_fns.p(1.0 - 1e-9), special_fns.p(1.0 + 1e-9)
    yield "p_seam", abs(lo - hi) < 1e-8, f"|jump| {abs(lo - hi):.1e}"

    d = abs(special_fns.qfun(0.0) - 1.0 / sqrt2pi)
    yield "q_at_zero", d < 1e-12, f"dev {d:.1e}"

    gv = suite.g_table.values
    pv = suite.phi_table.values
    ok = bool(gv.min() > 0.0 and pv.min() > 0.0
              and np.all(np.diff(suite.Phi_table.values) > 0.0)
              and abs(suite.Phi(0.0)) < 1e-12)
    yield "suite_monotone_positive", ok, "g > 0, phi > 0, Phi increasing"

    mass = float(trapz(gv, dx=suite.g_table.dx))
    ref = 2.0 ** (1.0 / 3.0) / airy.AI_ZERO
    yield "g_total_mass", abs(mass - ref) < 5e-6, f"dev {abs(mass - ref):.1e}"

    xs = suite.phi_table._xs
    fmass = float(trapz(suite.f_v0(xs), dx=suite.dx))
    yield "fv0_normalized", abs(fmass - 1.0) < 1e-4, f"dev {abs(fmass - 1):.1e}"

    xg = np.linspace(-2.0, 2.0, 41)
    dev = 0.0
    for x in xg:
        gx = math.exp(-(2.0 / 3.0) * x ** 3) * special_fns.u2(float(x))
        dev = max(dev, abs(gx - special_fns.g(float(x))) / gx)
    yield "u2_identity", dev < 1e-6, f"max rel dev {dev:.1e}"

    d = abs(special_fns.phi(0.0) - 1.862271699209004)
    yield "phi_at_zero", d < 1e-9, f"dev {d:.1e}"

    d = abs(special_fns.charfn_v0(0.0) - 1.0)
    yield "charfn_at_zero", d < 1e-6, f"dev {d:.1e}"

    k1, ev = constants.k1_airy(), constants.ev0_sq()
    yield "k1_reference", abs(k1 - 2.10848) < 2e-3, f"k1 {k1:.6f}"
    yield "k1_vs_ev0", abs(k1 - 8.0 * ev) < 1e-4, f"dev {abs(k1 - 8 * ev):.1e}"

    rng = np.random.default_rng(20260817)
    bad = 0
    for _ in range(300):
        n = int(rng.integers(1, 13))
        sample = rng.random(n) if rng.random() < 0.5 \
            else rng.exponential(size=n)
        hull = grenander.lcm_empirical(sample)
        px = np.concatenate(([0.0], np.sort(sample)))
        py = np.arange(n + 1) / n
        keep = np.nonzero(np.diff(px, append=np.inf) > 0.0)[0]
        px, py = px[keep], py[keep]
        verts = _hull_brute(px, py)
        if not (np.array_equal(hull.x, px[verts])
                and np.array_equal(hull.y, py[verts])):
            bad += 1
    yield "hull_vs_brute_force", bad == 0, f"{bad} mismatches in 300"

    tables = vertex_sim.build_sim_tables(suite=suite)
    yy = np.linspace(0.0, 3.9, 4001)
    jm = float(trapz(vertex_sim.jump_density(0.0, yy, tables), yy))
    yield "jump_density_normalized", abs(jm - 1.0) < 1e-4, f"dev {abs(jm - 1):.1e}"

    if quick:
        return

    a = float(special_fns._g_series_arr(np.array([-3.0]))[0])
    b = float(special_fns._g_fourier_arr(np.array([-3.0]))[0])
    yield "g_route_agreement", abs(a - b) < 1e-8, f"|tail - fourier| {abs(a - b):.1e}"

    rep = special_fns.fourier_checks([1.0])
    dev = max(rep["p1_max_dev"], rep["h_max_dev"])
    yield "fourier_transforms", dev < 1e-5, f"max dev {dev:.1e}"

    d1 = abs(grenander.theory_coefficient(grenander.TRIANGULAR)
             - 3.0 * 4.0 ** (-2.0 / 3.0))
    d2 = abs(grenander.theory_coefficient(grenander.EXPONENTIAL)
             - 3.0 * 2.0 ** (-2.0 / 3.0))
    yield "jump_rate_functional", max(d1, d2) < 1e-5, f"dev {max(d1, d2):.1e}"

    kd = constants.k1_double_integral()
    yield "k1_route_agreement", abs(k1 - kd) < 5e-3, f"dev {abs(k1 - kd):.1e}"

    a1 = -2.338107410459767
    ratio = special_fns.p(6.0) / (2.0 * math.exp(2.0 ** (1.0 / 3.0) * a1 * 6.0))
    yield "p_tail_leading_zero", abs(ratio - 1.0) < 2e-6, f"dev {abs(ratio - 1):.1e}"

    rng = np.random.default_rng(4)
    waits = np.sort([vertex_sim.sample_waiting_time(rng, 1.0, tables)
                     for _ in range(2000)])
    cdf = 1.0 - np.exp(-(suite.Phi(1.0) - suite.Phi(1.0 - waits)))
    ks = float(np.max(np.abs(cdf - np.arange(1, 2001) / 2000.0)))
    yield "waiting_time_law", ks < 0.05, f"ks {ks:.3f}"

    cfg = vertex_sim.SimConfig(horizon=500.0, replications=2, seed=11)
    c1 = vertex_sim.estimate_rates(cfg, tables=tables).window_counts
    c2 = vertex_sim.estimate_rates(cfg, tables=tables).window_counts
    yield "simulation_deterministic", bool(np.array_equal(c1, c2)), \
        f"{len(c1)} windows"


def cmd_selftest(args):
    t0 = time.monotonic()
    results = []
    n_fail = 0
    for name, ok, detail in _selftest_checks(args.quick):
        results.append({"name": name, "ok": bool(ok), "detail": detail})
        if not ok:
            n_fail += 1
        if not args.json:
            print(f"{'ok  ' if ok else 'FAIL'} {name} ({detail})")
    manifest = _manifest("selftest", {"quick": args.quick}, args.seed, t0)
    if args.json:
        _emit_json({"checks": results, "failures": n_fail,
                    "manifest": manifest}, args.out)
    else:
        print(f"{len(results) - n_fail}/{len(results)} checks passed "
              f"in {manifest['duration_s']:.1f} s")
    return 2 if n_fail else 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="RNG seed for seeded commands (default 0)")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="write the primary output to PATH")
    common.add_argument("--json", action="store_true",
                        help="JSON output for text-default commands")
    common.add_argument("--table-range", default=None, metavar="LO:HI",
                        help="tabulation range (tabulate)")
    common.add_argument("--table-step", type=float, default=None,
                        help="tabulation step (tabulate)")

    parser = _Parser(prog="lcmjumps",
                     description="Vertex-process constants, tables, "
                                 "simulations, and Grenander jump counts.")
    parser.add_argument("--version", action="version",
                        version=f"lcmjumps {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("constants", parents=[common],
                        help="print the constants JSON")
    pc.add_argument("--skip-covariance", action="store_true",
                    help="skip the covariance solver (fields become null)")
    pc.set_defaults(fn_cmd=cmd_constants)

    pt = sub.add_parser("tabulate", parents=[common],
                        help="CSV table of a core function")
    pt.add_argument("fn", choices=sorted(_TAB_DEFAULTS))
    pt.add_argument("--from", dest="lo", type=float, default=None)
    pt.add_argument("--to", dest="hi", type=float, default=None)
    pt.add_argument("--step", type=float, default=None)
    pt.add_argument("--transform", choices=["u32"], default=None,
                    help="u32: emit u^{3/2} p(u) instead of p(u)")
    pt.set_defaults(fn_cmd=cmd_tabulate)

    ps = sub.add_parser("simulate", parents=[common],
                        help="windowed vertex-count experiment")
    ps.add_argument("--horizon", type=float, default=2000.0)
    ps.add_argument("--reps", type=int, default=100)
    ps.add_argument("--window", type=float, default=50.0)
    ps.add_argument("--csv", default=None, metavar="PATH",
                    help="also write per-window counts as CSV")
    ps.set_defaults(fn_cmd=cmd_simulate)

    pg = sub.add_parser("grenander", parents=[common],
                        help="Monte Carlo jump counts of the Grenander "
                             "estimator")
    pg.add_argument("--model", choices=sorted(grenander.MODELS),
                    default="triangular")
    pg.add_argument("--n", type=int, default=1000)
    pg.add_argument("--reps", type=int, default=1000)
    pg.add_argument("--csv", default=None, metavar="PATH",
                    help="also write per-replication counts as CSV")
    pg.set_defaults(fn_cmd=cmd_grenander)

    pq = sub.add_parser("selftest", parents=[common],
                        help="run the invariant suite")
    pq.add_argument("--quick", action="store_true",
                    help="subset that finishes in under a minute")
    pq.set_defaults(fn_cmd=cmd_selftest)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn_cmd(args)
    except _UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 64
    except (AccuracyError, EnvelopeViolation) as exc:
        print(f"{parser.prog}: numerical failure: {exc}", file=sys.stderr)
        return 70


if __name__ == "__main__":
    sys.exit(main())

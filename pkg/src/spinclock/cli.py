"""Command-line driver: overlap tables, figure traces, clock traces,
symbol tables and the verification suite, emitted as CSV or JSON.

Outputs are deterministic: numeric formatting is full round-trip
precision, the effective config is echoed into the output metadata, and
nothing time- or thread-dependent is written to the files.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import __version__, clock, coherent, fock, symbols, verify
from .errors import SpinclockError

USAGE_ERROR = 1
VERIFY_FAILURE = 2


class _Parser(argparse.ArgumentParser):
    # spec'd exit codes: 1 for usage errors (argparse default is 2)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _parse_complex(text: str) -> complex:
    re, _, im = text.partition(",")
    return complex(float(re), float(im) if im else 0.0)


def _parse_sweep(text: str) -> tuple[str, float, float, int]:
    parts = text.split(":")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("sweep must be VAR:MIN:MAX:COUNT")
    var, lo, hi, count = parts[0], float(parts[1]), float(parts[2]), int(parts[3])
    if count < 2:
        raise argparse.ArgumentTypeError("sweep count must be >= 2")
    if hi <= lo:
        raise argparse.ArgumentTypeError("sweep needs MAX > MIN")
    return var, lo, hi, count


def _write_table(columns: dict, meta: dict, fmt: str, out: str | None):
    meta = dict(meta, version=__version__)
    meta_json = json.dumps(meta, sort_keys=True, default=str)
    if fmt == "json":
        payload = {"meta": meta,
                   "columns": {k: [v if not isinstance(v, float) else float(_fmt(v))
                                   for v in vals]
                               for k, vals in columns.items()}}
        text = json.dumps(payload, sort_keys=True, default=str, indent=1) + "\n"
    else:
        names = list(columns)
        nrows = len(next(iter(columns.values())))
        lines = [f"# config {meta_json}", ",".join(names)]
        for i in range(nrows):
            lines.append(",".join(_fmt(columns[k][i]) for k in names))
        text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve(args, key, default):
    """flag > config file > built-in default"""
    val = getattr(args, key.replace("-", "_"), None)
    if val is not None:
        return val
    if args.config_data and key in args.config_data:
        return args.config_data[key]
    return default


def _spin(args) -> float:
    j = _resolve(args, "j", None)
    m_prime = _resolve(args, "m_prime", None)
    if j is not None and m_prime is not None:
        raise SpinclockError("give exactly one of --j / --m-prime")
    if m_prime is not None:
        return m_prime / 2.0
    if j is None:
        raise SpinclockError("one of --j / --m-prime is required")
    return float(j)


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--j", type=float, help="spin j (2j must be an integer)")
    p.add_argument("--m-prime", type=int, help="total quanta m' = 2j")
    p.add_argument("--omega", type=float, help="oscillator frequency (default 1)")
    p.add_argument("--hbar", type=float, help="Planck constant (default 1)")
    p.add_argument("--quad-order", type=int, help="polar quadrature order override")
    p.add_argument("--sweep", type=_parse_sweep, help="sweep as VAR:MIN:MAX:COUNT")
    p.add_argument("--xi", type=_parse_complex, help="chart coordinate as RE,IM")
    p.add_argument("--phi-prime", type=float, help="clock phase offset (default 0)")
    p.add_argument("--format", choices=("csv", "json"), help="output format")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--seed", type=int, help="seed for property sampling")
    p.add_argument("--config", help="JSON config file (flags override it)")


def build_parser() -> _Parser:
    parser = _Parser(prog="spinclock",
                     description="constrained double-oscillator quantum clock toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in [("overlap", cmd_overlap), ("figure", cmd_figure),
                     ("clock-trace", cmd_clock_trace), ("symbols", cmd_symbols),
                     ("verify", cmd_verify)]:
        p = sub.add_parser(name)
        _add_common(p)
        p.set_defaults(func=fn)
        if name == "overlap":
            p.add_argument("--xi-prime", type=_parse_complex,
                           help="second label as RE,IM (alternative to --sweep)")
        if name == "figure":
            p.add_argument("which", type=int, choices=(1, 2))
            p.add_argument("--theta", type=float,
                           help="reference amplitude angle (figure 1, default pi/4)")
            p.add_argument("--xi-mag", type=float,
                           help="reference |xi| (figure 2, default 1)")
            p.add_argument("--antipodal", action="store_true",
                           help="interpret angles on the swapped-oscillator chart")
        if name == "clock-trace":
            p.add_argument("--m", type=int, help="total quanta (alias of --m-prime)")
    return parser


def _meta(args, **extra) -> dict:
    meta = {"omega": _resolve(args, "omega", 1.0),
            "hbar": _resolve(args, "hbar", 1.0),
            "seed": _resolve(args, "seed", 0)}
    meta.update(extra)
    return meta


def cmd_overlap(args) -> int:
    j = _spin(args)
    xi = _resolve(args, "xi", 0.0 + 0.0j)
    sweep = _resolve(args, "sweep", None)
    if sweep is not None:
        if sweep[0] != "xi_prime":
            raise SpinclockError("overlap sweeps over xi_prime")
        xps = np.linspace(sweep[1], sweep[2], sweep[3]).astype(complex)
    else:
        xps = np.array([_resolve(args, "xi_prime", xi)])
    vals = [coherent.overlap(xp, xi, j) for xp in xps]
    cols = {
        "xi_re": [xi.real] * len(xps),
        "xi_im": [xi.imag] * len(xps),
        "xi_prime_re": [xp.real for xp in xps],
        "xi_prime_im": [xp.imag for xp in xps],
        "overlap_re": [v.real for v in vals],
        "overlap_im": [v.imag for v in vals],
        "overlap_abs": [abs(v) for v in vals],
    }
    _write_table(cols, _meta(args, command="overlap", j=j), _resolve(args, "format", "csv"),
                 _resolve(args, "out", None))
    return 0


def cmd_figure(args) -> int:
    j = _spin(args)
    fmt = _resolve(args, "format", "csv")
    out = _resolve(args, "out", None)
    chart = "antipodal" if args.antipodal else "primary"
    if args.which == 1:
        theta = _resolve(args, "theta", math.pi / 4)
        if args.antipodal:
            theta = math.pi / 2 - theta
        sweep = _resolve(args, "sweep", ("theta_prime", theta - 0.75, theta + 0.75, 201))
        grid = np.linspace(sweep[1], sweep[2], sweep[3])
        if args.antipodal:
            grid = math.pi / 2 - grid
        trace = clock.amplitude_correlation(theta, j, grid)
        sweep_name = "theta_prime"
    else:
        xi_mag = _resolve(args, "xi_mag", 1.0)
        sweep = _resolve(args, "sweep", ("delta_phi", -math.pi, math.pi, 201))
        grid = np.linspace(sweep[1], sweep[2], sweep[3])
        trace = clock.phase_correlation(xi_mag, j, grid)
        sweep_name = "delta_phi"
    n = len(trace.sweep)
    cols = {
        sweep_name: list(trace.sweep),
        "overlap_abs": list(trace.overlap),
        "gaussian_fit": list(trace.gaussian),
        "sigma2_fit": [trace.sigma2_fit] * n,
        "sigma2_pred": [trace.sigma2_pred] * n,
    }
    meta = _meta(args, command=f"figure{args.which}", j=j, chart=chart)
    meta.update({k: v for k, v in trace.meta.items() if k not in meta})
    _write_table(cols, meta, fmt, out)
    return 0


def cmd_clock_trace(args) -> int:
    m = args.m if args.m is not None else int(round(2 * _spin(args)))
    xi = _resolve(args, "xi", 1.0 + 0.0j)
    omega = _resolve(args, "omega", 1.0)
    phi_prime = _resolve(args, "phi_prime", 0.0)
    sweep = _resolve(args, "sweep", ("tau", 0.0, 4 * math.pi, 201))
    taus = np.linspace(sweep[1], sweep[2], sweep[3])
    quantum = clock.clock_symbol_q1(xi, m, taus, phi_prime, omega)
    a_cl = clock.classical_amplitude(m, xi, omega, _resolve(args, "hbar", 1.0))
    phase = np.angle(xi) if abs(xi) > 0 else 0.0
    classical_q1 = a_cl * np.cos(omega * taus + phi_prime + phase)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(np.abs(classical_q1) > 1e-12 * max(a_cl, 1e-300),
                         quantum / np.where(classical_q1 != 0, classical_q1, 1.0),
                         np.nan)
    cols = {"tau": list(taus), "q1_quantum": list(np.atleast_1d(quantum)),
            "q1_classical": list(classical_q1), "ratio": list(ratio)}
    _write_table(cols, _meta(args, command="clock-trace", m=m,
                             xi=f"{xi.real},{xi.imag}", phi_prime=phi_prime),
                 _resolve(args, "format", "csv"), _resolve(args, "out", None))
    return 0


def cmd_symbols(args) -> int:
    j = _spin(args)
    m_prime = int(round(2 * j))
    sweep = _resolve(args, "sweep", ("xi", 0.0, 3.0, 61))
    xis = np.linspace(sweep[1], sweep[2], sweep[3]).astype(complex)
    mats = fock.spin_operators(m_prime) if m_prime >= 1 else None
    cols = {k: [] for k in ("xi_re", "xi_im", "s1_closed", "s2_closed", "s3_closed",
                            "s1_upper", "s2_upper", "s3_upper")}
    for x in xis:
        s1, s2, s3 = symbols.spin_symbols_closed_form(complex(x), j)
        cols["xi_re"].append(x.real)
        cols["xi_im"].append(x.imag)
        cols["s1_closed"].append(s1)
        cols["s2_closed"].append(s2)
        cols["s3_closed"].append(s3)
        if mats is None:
            ups = (0.0, 0.0, 0.0)
        else:
            ups = tuple(symbols.upper_symbol(mat, complex(x), j).real for mat in mats)
        cols["s1_upper"].append(ups[0])
        cols["s2_upper"].append(ups[1])
        cols["s3_upper"].append(ups[2])
    _write_table(cols, _meta(args, command="symbols", j=j),
                 _resolve(args, "format", "csv"), _resolve(args, "out", None))
    return 0


def cmd_verify(args) -> int:
    j = _resolve(args, "j", None)
    if j is None and _resolve(args, "m_prime", None) is not None:
        j = _resolve(args, "m_prime", None) / 2.0
    if j is None:
        j = 5.0
    seed = _resolve(args, "seed", 0)
    quad_order = _resolve(args, "quad_order", None)
    results = verify.run_checks(j=j, seed=seed, quad_order=quad_order)
    fmt = _resolve(args, "format", "csv")
    if fmt == "json":
        payload = {"meta": dict(_meta(args, command="verify", j=j), version=__version__),
                   "checks": [{"name": r.name, "passed": r.passed,
                               "measured": float(_fmt(r.measured)), "tol": r.tol}
                              for r in results],
                   "all_passed": all(r.passed for r in results)}
        text = json.dumps(payload, sort_keys=True, indent=1) + "\n"
    else:
        cols = {"name": [r.name for r in results],
                "passed": [int(r.passed) for r in results],
                "measured": [r.measured for r in results],
                "tol": [r.tol for r in results]}
        out = _resolve(args, "out", None)
        _write_table(cols, _meta(args, command="verify", j=j), "csv", out)
        for r in results:
            print(r.line(), file=sys.stderr)
        return 0 if all(r.passed for r in results) else VERIFY_FAILURE
    out = _resolve(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for r in results:
        print(r.line(), file=sys.stderr)
    return 0 if all(r.passed for r in results) else VERIFY_FAILURE


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.config_data = None
    if getattr(args, "config", None):
        with open(args.config) as fh:
            args.config_data = json.load(fh)
    try:
        return args.func(args)
    except SpinclockError as exc:
        print(f"spinclock: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, OSError) as exc:
        print(f"spinclock: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

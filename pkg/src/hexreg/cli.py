"""Command line front end.

Subcommands: `transfer` (one transfer value), `synth` (regulator
parameters + profiles CSV), `simulate` (trace CSV for open / feedforward /
feedback runs) and `reproduce-paper` (one-shot rerun of the built-in
benchmark scenario with a pass/fail table against its reference values).

Configs are flat `key = value` text files with `#` comments; every key has
a benchmark default, so an empty (or absent) config runs the reference
scenario.  All file output is plain CSV with 12 significant digits and LF
line endings; runs are fully deterministic.
"""
from __future__ import annotations

import argparse
import dataclasses
import math
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import Profile, SpatialGrid, eig2, eval_at
from .errors import ConfigError, RegulatorError
from .exosystem import ExoSystem, eigen_pairs, flow
from .plant import PlantConfig
from .simulate import (FeedforwardSetup, SimTrace, simulate_feedforward,
                       simulate_open_loop, simulate_output_feedback,
                       tracking_metrics)
from .synthesis import (RegulatorParams, separation_residual, synthesize,
                        sylvester_residuals)
from .transfer import transfer_value

# ---------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class RunConfig:
    """Validated run configuration; defaults reproduce the benchmark scenario."""

    n_grid: int = 2001
    cfl: float = 1.0
    g: tuple = ("linear", (0.4,))
    b: tuple = ("exp", (1.0, 0.5))
    bd: float = 0.2
    z0: float = 1.0
    z1: float = 0.5
    alpha: float = 2.0
    upsilon: float = 5.0
    S: tuple | None = None
    F: tuple | None = None
    Q: tuple | None = None
    w0: tuple | None = None
    k1: float = 0.0
    ly: tuple | None = (0.1, 1.0)
    r_w0: tuple = (0.1, 4.6)
    t_final: float = 20.0
    transient: float = 15.0
    snapshots: tuple = ()
    out: str = "out"


_FLOAT_KEYS = {"cfl", "bd", "z0", "z1", "alpha", "upsilon", "k1", "t_final", "transient"}
_VECTOR_KEYS = {"F", "Q", "w0", "r_w0", "snapshots"}
_COEFF_KEYS = {"g", "b"}
_ALL_KEYS = ({"n_grid", "S", "ly", "out"} | _FLOAT_KEYS | _VECTOR_KEYS | _COEFF_KEYS)


def _parse_vector(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(float(p) for p in text.split(","))


def _parse_matrix(text: str) -> tuple:
    return tuple(_parse_vector(row) for row in text.split(";"))


def _parse_coefficient(text: str) -> tuple:
    if ":" not in text:
        raise ValueError("expected 'kind: args' with kind in "
                         "constant/linear/exp/table")
    kind, _, args = text.partition(":")
    kind = kind.strip()
    args = args.strip()
    if kind == "constant" or kind == "linear":
        return (kind, (float(args),))
    if kind == "exp":
        vals = _parse_vector(args)
        if len(vals) != 2:
            raise ValueError("exp spec needs two numbers: gamma, bbar")
        return (kind, vals)
    if kind == "table":
        if not args:
            raise ValueError("table spec needs a file path")
        return (kind, (args,))
    raise ValueError(f"unknown coefficient kind {kind!r}")


def parse_config_text(text: str) -> RunConfig:
    """Parse the key = value config format; unknown keys and bad values are
    reported with their line number."""
    fields: dict = {}
    lines: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _ALL_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            if key == "n_grid":
                fields[key] = int(value)
            elif key in _FLOAT_KEYS:
                fields[key] = float(value)
            elif key == "S":
                fields[key] = _parse_matrix(value)
            elif key == "ly":
                fields[key] = None if value == "auto" else _parse_vector(value)
            elif key in _VECTOR_KEYS:
                fields[key] = _parse_vector(value)
            elif key in _COEFF_KEYS:
                fields[key] = _parse_coefficient(value)
            else:
                fields[key] = value
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: key {key!r}: {exc}") from exc
        lines[key] = lineno
    rc = RunConfig(**fields)
    _validate(rc, lines)
    return rc


def parse_config(path) -> RunConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return parse_config_text(text)


def _where(key: str, lines: dict[str, int]) -> str:
    return f"line {lines[key]}: " if key in lines else ""


def _validate(rc: RunConfig, lines: dict[str, int]) -> None:
    def fail(key, msg):
        raise ConfigError(f"{_where(key, lines)}key {key!r}: {msg}")

    if rc.n_grid < 3:
        fail("n_grid", f"must be >= 3, got {rc.n_grid}")
    if not 0.0 < rc.cfl <= 1.0:
        fail("cfl", f"must lie in (0, 1], got {rc.cfl}")
    for key in ("z0", "z1"):
        v = getattr(rc, key)
        if not 0.0 < v <= 1.0:
            fail(key, f"must lie in (0, 1], got {v}")
    if rc.alpha < 0.0:
        fail("alpha", f"must be >= 0, got {rc.alpha}")
    if rc.t_final <= 0.0:
        fail("t_final", f"must be > 0, got {rc.t_final}")
    if not 0.0 <= rc.transient < rc.t_final:
        fail("transient", f"must lie in [0, t_final), got {rc.transient}")
    if any(t < 0.0 for t in rc.snapshots):
        fail("snapshots", "snapshot times must be >= 0")
    given = [k for k in ("S", "F", "Q", "w0") if getattr(rc, k) is not None]
    if given and len(given) != 4:
        fail(given[0], "S, F, Q and w0 must be overridden together")
    n = len(rc.S) if rc.S is not None else 2
    if rc.ly is not None and len(rc.ly) != n:
        fail("ly", f"needs {n} entries or 'auto', got {len(rc.ly)}")
    if len(rc.r_w0) != n:
        fail("r_w0", f"needs {n} entries, got {len(rc.r_w0)}")


def coefficient_profile(spec: tuple, grid: SpatialGrid) -> Profile:
    kind, args = spec
    if kind == "constant":
        return Profile.constant(grid, args[0])
    if kind == "linear":
        return Profile(grid, args[0] * grid.z)
    if kind == "exp":
        gamma, bbar = args
        return Profile(grid, gamma * np.exp(-bbar * grid.z))
    if kind == "table":
        try:
            data = np.loadtxt(args[0], delimiter=",", comments="#", ndmin=2)
        except OSError as exc:
            raise ConfigError(f"cannot read table file {args[0]}: {exc}") from exc
        if data.shape[1] != 2:
            raise ConfigError(f"table file {args[0]} needs two columns (z, value)")
        zs, vs = data[:, 0], data[:, 1]
        if np.any(np.diff(zs) <= 0):
            raise ConfigError(f"table file {args[0]} must have strictly increasing z")
        return Profile(grid, np.interp(grid.z, zs, vs))
    raise ConfigError(f"unknown coefficient kind {kind!r}")


def build_plant(rc: RunConfig) -> PlantConfig:
    grid = SpatialGrid(rc.n_grid)
    return PlantConfig(
        grid=grid,
        g=coefficient_profile(rc.g, grid),
        b=coefficient_profile(rc.b, grid),
        b_d=Profile.constant(grid, rc.bd),
        z1=rc.z1,
        z0=rc.z0,
        cfl=rc.cfl,
    )


def build_exo(rc: RunConfig) -> ExoSystem:
    if rc.S is not None:
        return ExoSystem(S=np.array(rc.S, dtype=float), F=np.array(rc.F, dtype=float),
                         Q=np.array(rc.Q, dtype=float), w0=np.array(rc.w0, dtype=float))
    return ExoSystem.harmonic(rc.alpha, rc.upsilon)


# ---------------------------------------------------------------------------
# CSV output


def _fmt(v) -> str:
    return format(float(v), ".12g")


def write_csv(path: Path, header: list[str], columns: list[np.ndarray]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in zip(*columns):
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def trace_header(n_exo: int) -> list[str]:
    return (["t", "y", "ym", "yr", "e", "d", "u_ff", "eps"]
            + [f"w_{i + 1}" for i in range(n_exo)]
            + [f"rw_{i + 1}" for i in range(n_exo)])


def write_trace_csv(path: Path, trace: SimTrace) -> None:
    cols = [trace.times, trace.y, trace.ym, trace.yr, trace.e, trace.d,
            trace.u_ff, trace.eps]
    cols += [trace.w[:, i] for i in range(trace.n_exo)]
    cols += [trace.r_w[:, i] for i in range(trace.n_exo)]
    write_csv(path, trace_header(trace.n_exo), cols)


def read_trace_csv(path) -> dict[str, np.ndarray]:
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return {name: data[:, i] for i, name in enumerate(header)}


def _write_snapshots(out_dir: Path, trace: SimTrace, prefix: str = "snapshot") -> None:
    for t, profile in trace.snapshots:
        path = out_dir / f"{prefix}_t{format(t, 'g')}.csv"
        write_csv(path, ["z", "x"], [profile.grid.z, np.real(profile.values)])


# ---------------------------------------------------------------------------
# subcommands


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise ConfigError(f"cannot parse complex frequency {text!r}") from exc


def _say(quiet: bool, *parts) -> None:
    if not quiet:
        print(*parts)


def cmd_transfer(rc: RunConfig, s: complex, channel: str, out_dir: Path | None = None,
                 quiet: bool = False) -> int:
    cfg = build_plant(rc)
    influence = cfg.b if channel == "actuator" else Profile.constant(cfg.grid, 1.0)
    tv = transfer_value(cfg, s, influence, rc.z1)
    print(f"{s} {_fmt(tv.value.real)} {_fmt(tv.value.imag)}")
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        write_csv(out_dir / "transfer.csv",
                  ["s_re", "s_im", "value_re", "value_im"],
                  [np.array([s.real]), np.array([s.imag]),
                   np.array([tv.value.real]), np.array([tv.value.imag])])
        _say(quiet, f"wrote {out_dir / 'transfer.csv'}")
    return 0


def _synthesize_from(rc: RunConfig):
    cfg = build_plant(rc)
    exo = build_exo(rc)
    ly_candidate = None if rc.ly is None else np.array(rc.ly, dtype=float)
    params = synthesize(cfg, exo, k1=rc.k1, ly_candidate=ly_candidate)
    return cfg, exo, params


def write_profiles_csv(path: Path, cfg: PlantConfig, params: RegulatorParams) -> None:
    n = params.n
    header = (["z"] + [f"Pi_{j + 1}" for j in range(n)]
              + [f"Pi0_{j + 1}" for j in range(n)] + ["k"])
    cols = [cfg.grid.z] + [p.values for p in params.pi] \
        + [p.values for p in params.pi0] + [params.k_profile.values]
    write_csv(path, header, cols)


def cmd_synth(rc: RunConfig, out_dir: Path, quiet: bool = False) -> int:
    cfg, exo, params = _synthesize_from(rc)
    closed = exo.S + np.outer(params.ly, params.cm_pi0)
    eigs = eig2(closed) if exo.n == 2 else tuple(np.linalg.eigvals(closed))
    print("gamma    =", " ".join(_fmt(v) for v in params.gamma))
    print("cm_pi    =", " ".join(_fmt(v) for v in params.cm_pi))
    print("cm_pi0   =", " ".join(_fmt(v) for v in params.cm_pi0))
    source = "search" if rc.ly is None else "candidate accepted"
    print(f"ly       = {' '.join(_fmt(v) for v in params.ly)}   ({source})")
    print("closed-loop eigenvalues:",
          "  ".join(f"{lam.real:.6g}{lam.imag:+.6g}j" for lam in eigs))
    out_dir.mkdir(parents=True, exist_ok=True)
    write_profiles_csv(out_dir / "profiles.csv", cfg, params)
    _say(quiet, f"wrote {out_dir / 'profiles.csv'}")
    return 0


def cmd_simulate(rc: RunConfig, mode: str, out_dir: Path, quiet: bool = False) -> int:
    cfg = build_plant(rc)
    exo = build_exo(rc)
    x0 = Profile.zeros(cfg.grid)
    if mode == "open":
        trace = simulate_open_loop(cfg, x0, u=None, d=None, t_final=rc.t_final,
                                   exo=exo, snapshot_times=rc.snapshots)
    elif mode == "feedforward":
        _, _, params = _synthesize_from(rc)
        setup = FeedforwardSetup(r_w0=exo.w0, matched=True)
        trace = simulate_feedforward(cfg, exo, params.gamma, params.pi, setup,
                                     rc.t_final, snapshot_times=rc.snapshots)
    elif mode == "feedback":
        _, _, params = _synthesize_from(rc)
        trace = simulate_output_feedback(cfg, exo, params, np.array(rc.r_w0), x0,
                                         rc.t_final, snapshot_times=rc.snapshots)
    else:
        raise ConfigError(f"unknown simulation mode {mode!r}")
    out_dir.mkdir(parents=True, exist_ok=True)
    write_trace_csv(out_dir / "trace.csv", trace)
    _write_snapshots(out_dir, trace)
    m = tracking_metrics(trace, rc.transient)
    print(f"max_err_after={_fmt(m.max_err_after)} "
          f"rms_err_after={_fmt(m.rms_err_after)} "
          f"settle_time={_fmt(m.settle_time) if math.isfinite(m.settle_time) else 'inf'}")
    _say(quiet, f"wrote {out_dir / 'trace.csv'}")
    return 0


# ---------------------------------------------------------------------------
# benchmark reproduction

# Reference values for the benchmark scenario.  The first block repeats the
# figures published for this scenario; the derived block was frozen from
# converged runs of this package (see README for the known discrepancies in
# the published block).
_REF = {
    "G_re": (0.3611, 2e-3),
    "G_im": (-0.2021, 2e-3),
    "G1_re": (0.4121, 2e-3),
    "G1_im": (-0.2183, 2e-3),
    "gamma_1": (2.114, 1e-2),
    "gamma_2": (0.9549, 1e-2),
    "cm_pi0_1": (-0.1229, 2e-3),
    "cm_pi0_2": (-0.0868, 2e-3),
    "hurwitz_trace_ref": (-0.0991, 2.5e-3),
    "hurwitz_det_ref": (4.228, 1e-2),
    "Pi_1(z1)": (1.0, 1e-3),
    "Pi_2(z1)": (0.0, 1e-3),
    "psi1_dev": (0.0, 1e-4),
    "exo_d_dev": (0.0, 1e-12),
    "exo_yr_dev": (0.0, 1e-12),
    "k(0)": (0.0, 1e-12),
    "k(1)": (-1.539522, 1e-3),
    "open_loop_amp": (0.495827, 1e-3),
    "open_loop_periodicity": (0.0, 5e-3),
}
_REF_CM_PI0 = np.array([-0.1229, -0.0868])
_REF_LY = np.array([0.1, 1.0])
_REF_PSI1 = np.array([-0.7071j, 0.7071])


@dataclass
class ReportRow:
    name: str
    expected: str
    got: float
    passed: bool

    def render(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"{flag}  {self.name:24s} expected {self.expected:18s} got {_fmt(self.got)}"


def _value_row(name: str, got: float, tamper: dict) -> ReportRow:
    expected, tol = _REF[name]
    got = got + tamper.get(name, 0.0)
    return ReportRow(name, f"{expected:g} +/- {tol:g}", got, abs(got - expected) <= tol)


def _bound_row(name: str, got: float, limit: float, tamper: dict) -> ReportRow:
    got = got + tamper.get(name, 0.0)
    return ReportRow(name, f"<= {limit:g}", got, got <= limit)


def _flag_row(name: str, ok: bool) -> ReportRow:
    return ReportRow(name, "True", float(ok), bool(ok))


def _envelope_window_maxima(trace: SimTrace, start: float, stop: float,
                            period: float) -> list[float]:
    out = []
    a = start
    while a + period <= stop + 1e-9:
        mask = (trace.times >= a) & (trace.times < a + period)
        out.append(float(np.max(np.abs(trace.e[mask]))))
        a += period
    return out


def cmd_reproduce_paper(rc: RunConfig, out_dir: Path, quiet: bool = False,
                        tamper: dict | None = None) -> tuple[list[ReportRow], bool]:
    """Recompute the benchmark scenario end to end and compare against the
    reference table.  `tamper` offsets named computed values before
    comparison (self-test hook for the harness)."""
    tamper = tamper or {}
    out_dir.mkdir(parents=True, exist_ok=True)
    t_start = time.perf_counter()
    cfg = build_plant(rc)
    exo = build_exo(rc)
    rows: list[ReportRow] = []

    s = 1j * rc.alpha
    G = transfer_value(cfg, s, cfg.b, rc.z1).value
    G1 = transfer_value(cfg, s, Profile.constant(cfg.grid, 1.0), rc.z1).value
    rows += [_value_row("G_re", G.real, tamper), _value_row("G_im", G.imag, tamper),
             _value_row("G1_re", G1.real, tamper), _value_row("G1_im", G1.imag, tamper)]

    _, _, params = _synthesize_from(rc)
    rows += [_value_row("gamma_1", params.gamma[0], tamper),
             _value_row("gamma_2", params.gamma[1], tamper),
             _value_row("cm_pi0_1", params.cm_pi0[0], tamper),
             _value_row("cm_pi0_2", params.cm_pi0[1], tamper)]

    ref_closed = exo.S + np.outer(_REF_LY, _REF_CM_PI0)
    rows += [_value_row("hurwitz_trace_ref", float(np.trace(ref_closed)), tamper),
             _value_row("hurwitz_det_ref", float(np.linalg.det(ref_closed)), tamper)]
    ours_closed = exo.S + np.outer(params.ly, params.cm_pi0)
    lam = eig2(ours_closed)
    rows.append(_flag_row("closed_loop_stable", all(l.real < 0 for l in lam)))

    rows += [_value_row("Pi_1(z1)", eval_at(params.pi[0], rc.z1), tamper),
             _value_row("Pi_2(z1)", eval_at(params.pi[1], rc.z1), tamper)]

    psi1 = eigen_pairs(exo)[0][1]
    rows.append(_value_row("psi1_dev", float(np.max(np.abs(psi1 - _REF_PSI1))), tamper))

    ts = np.linspace(0.0, 10.0, 401)
    W = flow(exo.S, exo.w0, ts)
    rows.append(_value_row("exo_d_dev",
                           float(np.max(np.abs(W @ exo.F - rc.upsilon * np.cos(rc.alpha * ts)))),
                           tamper))
    rows.append(_value_row("exo_yr_dev",
                           float(np.max(np.abs(W @ exo.Q - rc.upsilon * np.sin(rc.alpha * ts)))),
                           tamper))

    rows += [_value_row("k(0)", eval_at(params.k_profile, 0.0), tamper),
             _value_row("k(1)", eval_at(params.k_profile, 1.0), tamper)]

    res_pi, res_pi0 = sylvester_residuals(cfg, exo, params.gamma, params.pi,
                                          params.pi0, params.k1)
    rows += [_bound_row("sylvester_res_pi", res_pi, 1e-4, tamper),
             _bound_row("sylvester_res_pi0", res_pi0, 1e-4, tamper),
             _bound_row("separation_residual", separation_residual(cfg, params),
                        1e-10, tamper)]

    period = 2.0 * math.pi / rc.alpha
    x0 = Profile.zeros(cfg.grid)

    trace1 = simulate_open_loop(cfg, x0, u=None, d=None, t_final=rc.t_final, exo=exo)
    write_trace_csv(out_dir / "fig1_trace.csv", trace1)
    late = trace1.times > rc.transient
    amp = float(np.max(np.abs(trace1.y[late])))
    rows.append(_value_row("open_loop_amp", amp, tamper))
    shift = int(round(period / cfg.dt))
    idx = np.flatnonzero(trace1.times > rc.transient + period)
    per_dev = float(np.max(np.abs(trace1.y[idx] - trace1.y[idx - shift])))
    rows.append(_value_row("open_loop_periodicity", per_dev, tamper))

    trace3 = simulate_output_feedback(cfg, exo, params, np.array(rc.r_w0), x0,
                                      rc.t_final, snapshot_times=(0.0, 5.0, 10.0, 15.0, 20.0))
    write_trace_csv(out_dir / "fig3_trace.csv", trace3)
    _write_snapshots(out_dir, trace3, prefix="fig2_snapshot")
    m = tracking_metrics(trace3, rc.transient)
    rows.append(_bound_row("fb_max_err_late", m.max_err_after,
                           0.05 * rc.upsilon, tamper))
    env = _envelope_window_maxima(trace3, 2.0, rc.transient, period)
    rows.append(_flag_row("fb_envelope_decreasing",
                          all(b < a for a, b in zip(env, env[1:]))))

    setup = FeedforwardSetup(r_w0=exo.w0, matched=True)
    trace_ff = simulate_feedforward(cfg, exo, params.gamma, params.pi, setup,
                                    t_final=min(10.0, rc.t_final))
    write_trace_csv(out_dir / "ff_trace.csv", trace_ff)
    rows.append(_bound_row("ff_matched_max_err", float(np.max(np.abs(trace_ff.e))),
                           0.05, tamper))

    write_profiles_csv(out_dir / "profiles.csv", cfg, params)

    all_pass = all(r.passed for r in rows)
    report = "\n".join(r.render() for r in rows)
    summary = f"RESULT: {sum(r.passed for r in rows)}/{len(rows)} rows pass"
    (out_dir / "report.txt").write_text(report + "\n" + summary + "\n", encoding="utf-8")
    print(report)
    print(summary)
    _say(quiet, f"total runtime {time.perf_counter() - t_start:.1f}s; wrote {out_dir}")
    return rows, all_pass


# ---------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="config file (default: built-in benchmark)")
    common.add_argument("--out", metavar="DIR", help="output directory (default from config)")
    common.add_argument("--grid", type=int, metavar="N", help="override n_grid")
    common.add_argument("--quiet", action="store_true", help="suppress informational output")

    p = argparse.ArgumentParser(prog="hexreg",
                                description="Regulator synthesis and simulation for a "
                                            "1-D transport-reaction plant")
    sub = p.add_subparsers(dest="command", required=True)
    t = sub.add_parser("transfer", parents=[common], help="evaluate one transfer value")
    t.add_argument("--s", metavar="S", help="complex frequency, e.g. 2i (default: i*alpha)")
    t.add_argument("--channel", choices=["actuator", "unit"], default="actuator")
    sub.add_parser("synth", parents=[common], help="synthesize regulator parameters")
    m = sub.add_parser("simulate", parents=[common], help="run a time-domain simulation")
    m.add_argument("--mode", choices=["open", "feedforward", "feedback"], default="feedback")
    sub.add_parser("reproduce-paper", parents=[common],
                   help="rerun the benchmark scenario and check all reference values")
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        rc = parse_config(args.config) if args.config else RunConfig()
        if args.grid is not None:
            rc = dataclasses.replace(rc, n_grid=args.grid)
            _validate(rc, {})
        out_dir = Path(args.out if args.out is not None else rc.out)
        if args.command == "transfer":
            s = _parse_complex(args.s) if args.s else 1j * rc.alpha
            return cmd_transfer(rc, s, args.channel,
                                out_dir if args.out is not None else None, args.quiet)
        if args.command == "synth":
            return cmd_synth(rc, out_dir, args.quiet)
        if args.command == "simulate":
            return cmd_simulate(rc, args.mode, out_dir, args.quiet)
        if args.command == "reproduce-paper":
            _, all_pass = cmd_reproduce_paper(rc, out_dir, args.quiet)
            return 0 if all_pass else 1
        raise ConfigError(f"unknown command {args.command!r}")
    except RegulatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: rate computations, solvers, sweeps, CSV/JSON artifacts.

Everything here is deterministic: no RNG anywhere in the pipeline, CSV floats
carry 17 significant digits with '.' decimals and LF line endings, JSON keys
are sorted, and sweep output ordering is fixed by grid index regardless of
worker count.  Exit codes: 0 success, 1 configuration error, 2 domain error,
3 solver or verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path

import numpy as np

from . import fock
from .analysis import (
    DEFAULT_CONFIG,
    grid_sweep,
    max_distance,
    max_tolerable_noise,
    optimize_t,
)
from .catalysis import ZpcParams, catalyzed_covariance, coherent_wigner_section, success_probability
from .channel import ProtocolParams
from .errors import CutoffTooSmall, DomainError, NonPhysicalCovariance, SolverError
from .keyrate import RateBreakdown, original_protocol_rate, plob_bound, secret_key_rate

DETECTOR_PRESETS = {"ideal": (1.0, 0.0), "imperfect": (0.975, 0.002)}

SUBCOMMANDS = (
    "rate", "sweep-distance", "optimize-t", "max-noise", "max-distance",
    "surface", "wigner", "pd-surface", "verify",
)

_PARAM_KEYS = tuple(f.name for f in fields(ProtocolParams))
_DERIVED_PARAM_KEYS = ("l_ab", "eps", "detector")
_AXIS_KEYS = (
    "k_target", "l_min", "l_max", "steps",
    "eta_min", "eta_max", "eta_steps", "vel_min", "vel_max", "vel_steps",
    "t_min", "t_max", "t_steps", "lam_min", "lam_max", "lam_steps",
    "q_min", "q_max", "q_steps", "alpha_re", "alpha_im", "t_list",
)
_INT_KEYS = {"steps", "eta_steps", "vel_steps", "t_steps", "lam_steps", "q_steps"}
_STR_KEYS = {"detector", "t_list"}
CONFIG_SCHEMA = frozenset(_PARAM_KEYS) | frozenset(_DERIVED_PARAM_KEYS) | frozenset(_AXIS_KEYS)


class ConfigError(ValueError):
    """Unparseable or contradictory run configuration."""


@dataclass
class RunConfig:
    """Fully resolved invocation: subcommand, parameters, sweep options, output.

    fmt is None unless --format was given; handlers then fall back to their
    documented default (JSON for point solvers, CSV for sweeps).
    """

    subcommand: str
    params: ProtocolParams
    options: dict = field(default_factory=dict)
    output: str | None = None
    fmt: str | None = None
    workers: int = 1


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; route through ConfigError for exit 1
    def error(self, message):
        raise ConfigError(message)


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def _csv_text(header: list[str], rows: list[tuple]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt_float(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write(output: str | None, text: str) -> None:
    data = text.encode("utf-8")
    if output is None or output == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(output).write_bytes(data)


def _breakdown_dict(br: RateBreakdown) -> dict:
    return {
        "p_d": br.p_d, "i_ab": br.i_ab, "chi_be": br.chi_be,
        "k": br.k, "k_clamped": max(br.k, 0.0),
        "lambda1": br.lambda1, "lambda2": br.lambda2, "lambda3": br.lambda3,
        "cm_out": {"x_aa": br.cm_out.x_aa, "x_bb": br.cm_out.x_bb, "x_ab": br.cm_out.x_ab},
    }


def _plob_at(l_ab: float, kappa: float) -> float:
    tau = 10.0 ** (-kappa * l_ab / 10.0)
    return math.inf if tau >= 1.0 else plob_bound(tau)


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    if n < 1:
        raise ConfigError(f"step counts must be >= 1, got {n}")
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


# ---------------------------------------------------------------------------
# configuration assembly

def _read_config_file(path: str) -> dict:
    entries: dict[str, str] = {}
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, line in enumerate(raw.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in stripped.split("=", 1))
        if key not in CONFIG_SCHEMA:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if key in entries:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        entries[key] = value
    return entries


def _coerce(key: str, value: str):
    if key in _STR_KEYS:
        return value
    try:
        return int(value) if key in _INT_KEYS else float(value)
    except ValueError as exc:
        raise ConfigError(f"key {key!r}: cannot parse {value!r}") from exc


def _build_params(merged: dict) -> ProtocolParams:
    if "l_ab" in merged and "l_ac" in merged:
        raise ConfigError("give either l_ab or l_ac, not both")
    if "eps" in merged and ("eps_a" in merged or "eps_b" in merged):
        raise ConfigError("give either eps or eps_a/eps_b, not both")
    kwargs: dict[str, float] = {}
    detector = merged.get("detector")
    if detector is not None:
        if detector not in DETECTOR_PRESETS:
            raise ConfigError(f"unknown detector preset {detector!r}")
        kwargs["eta"], kwargs["v_el"] = DETECTOR_PRESETS[detector]
    for key in _PARAM_KEYS:
        if key in merged:
            kwargs[key] = merged[key]
    if "eps" in merged:
        kwargs["eps_a"] = kwargs["eps_b"] = merged["eps"]
    if "l_ab" in merged:
        kwargs["l_ac"] = merged["l_ab"] - kwargs.get("l_bc", 0.0)
    return ProtocolParams(**kwargs)


def _resolve_workers(flag_value: int | None) -> int:
    if flag_value is not None:
        return max(1, flag_value)
    env = os.environ.get("QKD_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise ConfigError(f"QKD_THREADS must be an integer, got {env!r}") from exc
    return os.cpu_count() or 1


_DEFAULT_OPTIONS: dict[str, dict] = {
    "rate": {},
    "sweep-distance": {"l_min": 0.0, "l_max": None, "steps": 201, "k_target": 1e-4,
                       "optimize": True},
    "optimize-t": {},
    "max-noise": {"l_min": None, "l_max": None, "steps": 26},
    "max-distance": {"k_target": 1e-4},
    "surface": {"eta_min": 0.8, "eta_max": 1.0, "eta_steps": 21,
                "vel_min": 0.0, "vel_max": 0.1, "vel_steps": 21, "optimize": True},
    "wigner": {"alpha_re": 1.0, "alpha_im": 0.0, "t_list": "1,0.9,0.8,0.7",
               "q_min": -1.0, "q_max": 3.0, "q_steps": 401},
    "pd-surface": {"t_min": 0.01, "t_max": 1.0, "t_steps": 50,
                   "lam_min": 0.0, "lam_max": 0.99, "lam_steps": 50},
    "verify": {"cutoff": 80, "bs_cutoff": 20},
}

def _add_param_flags(sp: argparse.ArgumentParser) -> None:
    for key in _PARAM_KEYS:
        sp.add_argument(f"--{key.replace('_', '-')}", type=float, default=None)
    sp.add_argument("--l-ab", type=float, default=None,
                    help="total distance; sets l_ac = l_ab - l_bc")
    sp.add_argument("--eps", type=float, default=None,
                    help="common excess noise for both links")
    sp.add_argument("--detector", choices=sorted(DETECTOR_PRESETS), default=None,
                    help="preset for (eta, v_el); explicit flags override it")
    sp.add_argument("--config", default=None, help="flat key=value parameter file")
    sp.add_argument("--output", default=None, help="output path (default stdout)")
    sp.add_argument("--format", choices=["csv", "json"], dest="fmt", default=None)
    sp.add_argument("--workers", type=int, default=None,
                    help="sweep worker processes (default QKD_THREADS or all cores)")


def build_parser() -> _Parser:
    parser = _Parser(prog="zpcqkd", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("rate", help="single-point key rate")
    _add_param_flags(sp)

    sp = sub.add_parser("sweep-distance", help="rate curve vs total distance")
    _add_param_flags(sp)
    sp.add_argument("--l-min", type=float, default=None)
    sp.add_argument("--l-max", type=float, default=None,
                    help="default: solved so the curve reaches --k-target")
    sp.add_argument("--steps", type=int, default=None)
    sp.add_argument("--k-target", type=float, default=None)
    sp.add_argument("--no-optimize", action="store_true",
                    help="evaluate at the fixed --t instead of optimizing")

    sp = sub.add_parser("optimize-t", help="best catalysis transmittance at one point")
    _add_param_flags(sp)

    sp = sub.add_parser("max-noise", help="maximal tolerable excess noise")
    _add_param_flags(sp)
    sp.add_argument("--l-min", type=float, default=None, help="sweep start (CSV mode)")
    sp.add_argument("--l-max", type=float, default=None, help="sweep end (CSV mode)")
    sp.add_argument("--steps", type=int, default=None)

    sp = sub.add_parser("max-distance", help="distance at which the rate hits --k-target")
    _add_param_flags(sp)
    sp.add_argument("--k-target", type=float, default=None)

    sp = sub.add_parser("surface", help="rate over the (eta, v_el) detector plane")
    _add_param_flags(sp)
    sp.add_argument("--eta-min", type=float, default=None)
    sp.add_argument("--eta-max", type=float, default=None)
    sp.add_argument("--eta-steps", type=int, default=None)
    sp.add_argument("--vel-min", type=float, default=None)
    sp.add_argument("--vel-max", type=float, default=None)
    sp.add_argument("--vel-steps", type=int, default=None)
    sp.add_argument("--no-optimize", action="store_true")

    sp = sub.add_parser("wigner", help="coherent-state Wigner sections for several t")
    _add_param_flags(sp)
    sp.add_argument("--alpha-re", type=float, default=None)
    sp.add_argument("--alpha-im", type=float, default=None)
    sp.add_argument("--t-list", default=None, help="comma-separated transmittances")
    sp.add_argument("--q-min", type=float, default=None)
    sp.add_argument("--q-max", type=float, default=None)
    sp.add_argument("--q-steps", type=int, default=None)

    sp = sub.add_parser("pd-surface", help="catalysis success probability over (t, lambda)")
    _add_param_flags(sp)
    sp.add_argument("--t-min", type=float, default=None)
    sp.add_argument("--t-max", type=float, default=None)
    sp.add_argument("--t-steps", type=int, default=None)
    sp.add_argument("--lam-min", type=float, default=None)
    sp.add_argument("--lam-max", type=float, default=None)
    sp.add_argument("--lam-steps", type=int, default=None)

    sp = sub.add_parser("verify", help="Fock-space validation of the catalysis closed forms")
    _add_param_flags(sp)
    sp.add_argument("--cutoff", type=int, default=None, help="photon cutoff for moment checks")
    sp.add_argument("--bs-cutoff", type=int, default=None,
                    help="cutoff for the explicit beam-splitter path")

    return parser


def parse_run_config(argv: list[str] | None = None) -> RunConfig:
    args = vars(build_parser().parse_args(argv))
    subcommand = args.pop("subcommand")
    config_path = args.pop("config", None)
    output = args.pop("output", None)
    fmt = args.pop("fmt", None)
    workers = _resolve_workers(args.pop("workers", None))

    file_entries = {}
    if config_path is not None:
        file_entries = {k: _coerce(k, v) for k, v in _read_config_file(config_path).items()}

    flag_entries = {k: v for k, v in args.items() if v is not None and v is not False}
    # merged views: file first, explicit flags win
    param_merged = {k: v for k, v in file_entries.items()
                    if k in _PARAM_KEYS or k in _DERIVED_PARAM_KEYS}
    param_merged.update({k: v for k, v in flag_entries.items()
                         if k in _PARAM_KEYS or k in _DERIVED_PARAM_KEYS})
    try:
        params = _build_params(param_merged)
    except DomainError:
        raise  # exit code 2, parameter named in the message

    options = dict(_DEFAULT_OPTIONS[subcommand])
    for key, value in file_entries.items():
        if key in options:
            options[key] = value
    for key, value in flag_entries.items():
        if key in options:
            options[key] = value
        elif key == "no_optimize":
            options["optimize"] = False
    return RunConfig(subcommand=subcommand, params=params, options=options,
                     output=output, fmt=fmt, workers=workers)


# ---------------------------------------------------------------------------
# subcommand handlers

def _rate_row(p: ProtocolParams, br: RateBreakdown) -> tuple:
    return (
        p.v_a, p.v_b, p.l_ac, p.l_bc, p.eps_a, p.eps_b, p.eta, p.v_el,
        p.beta, p.kappa, p.t,
        br.p_d, br.i_ab, br.chi_be, br.k, max(br.k, 0.0),
        br.lambda1, br.lambda2, br.lambda3,
        br.cm_out.x_aa, br.cm_out.x_bb, br.cm_out.x_ab,
    )


_RATE_HEADER = [
    "v_a", "v_b", "l_ac", "l_bc", "eps_a", "eps_b", "eta", "v_el",
    "beta", "kappa", "t",
    "p_d", "i_ab", "chi_be", "k", "k_clamped",
    "lambda1", "lambda2", "lambda3", "x_aa", "x_bb", "x_ab",
]


def _cmd_rate(cfg: RunConfig) -> str:
    br = secret_key_rate(cfg.params)
    if cfg.fmt == "csv":
        return _csv_text(_RATE_HEADER, [_rate_row(cfg.params, br)])
    doc = {"params": asdict(cfg.params)}
    doc.update(_breakdown_dict(br))
    return _json_text(doc)


def _cmd_sweep_distance(cfg: RunConfig) -> str:
    p = cfg.params
    o = cfg.options
    l_max = o["l_max"]
    if l_max is None:
        l_max = math.ceil(max_distance(p, o["k_target"]).value) + 2.0
    values = _linspace(o["l_min"], l_max, o["steps"])
    records = grid_sweep({"l_ab": values}, p, optimize=o["optimize"], workers=cfg.workers)
    rows = []
    for rec in records:
        l_ab = dict(rec.coords)["l_ab"]
        t_used = rec.t_opt if rec.t_opt is not None else rec.inputs.t
        br = rec.breakdown
        k_orig = original_protocol_rate(rec.inputs).k
        rows.append((l_ab, t_used, br.p_d, br.i_ab, br.chi_be, br.k,
                     max(br.k, 0.0), k_orig, _plob_at(l_ab, p.kappa)))
    header = ["l_ab", "t_opt", "p_d", "i_ab", "chi_be", "k", "k_clamped",
              "k_original", "plob"]
    if cfg.fmt == "json":
        return _json_text([dict(zip(header, row)) for row in rows])
    return _csv_text(header, rows)


def _cmd_optimize_t(cfg: RunConfig) -> str:
    t_opt, br, meta = optimize_t(cfg.params)
    doc = {"params": asdict(cfg.params), "t_opt": t_opt,
           "meta": {"iterations": meta.iterations, "bracket": list(meta.bracket),
                    "residual": meta.residual}}
    doc.update(_breakdown_dict(br))
    if cfg.fmt == "csv":
        p = replace(cfg.params, t=t_opt)
        return _csv_text(_RATE_HEADER, [_rate_row(p, br)])
    return _json_text(doc)


def _cmd_max_noise(cfg: RunConfig) -> str:
    p = cfg.params
    o = cfg.options
    if o["l_min"] is None and o["l_max"] is None:
        sol = max_tolerable_noise(p)
        if cfg.fmt == "csv":
            return _csv_text(["l_ab", "eps_max"], [(p.l_ab, sol.value)])
        doc = {"params": asdict(p), "l_ab": p.l_ab, "eps_max": sol.value,
               "residual": sol.meta.residual, "iterations": sol.meta.iterations}
        return _json_text(doc)
    if o["l_min"] is None or o["l_max"] is None:
        raise ConfigError("sweep mode needs both --l-min and --l-max")
    rows = []
    for l_ab in _linspace(o["l_min"], o["l_max"], o["steps"]):
        q = replace(p, l_ac=l_ab - p.l_bc)
        try:
            eps_zpc = max_tolerable_noise(q).value
        except SolverError:
            eps_zpc = math.nan
        try:
            eps_orig = max_tolerable_noise(replace(q, t=1.0), optimize=False).value
        except SolverError:
            eps_orig = math.nan
        rows.append((l_ab, eps_zpc, eps_orig))
    header = ["l_ab", "eps_max", "eps_max_original"]
    if cfg.fmt == "json":
        return _json_text([dict(zip(header, row)) for row in rows])
    return _csv_text(header, rows)


def _cmd_max_distance(cfg: RunConfig) -> str:
    p = cfg.params
    target = cfg.options["k_target"]
    zpc = max_distance(p, target)
    orig = max_distance(replace(p, t=1.0), target, optimize=False)
    doc = {
        "params": asdict(p), "k_target": target,
        "l_ab": zpc.value, "l_ab_original": orig.value,
        "gain_km": zpc.value - orig.value,
        "residual": zpc.meta.residual, "residual_original": orig.meta.residual,
        "iterations": zpc.meta.iterations + orig.meta.iterations,
    }
    if cfg.fmt == "csv":
        header = ["k_target", "l_ab", "l_ab_original", "gain_km"]
        return _csv_text(header, [(target, zpc.value, orig.value, zpc.value - orig.value)])
    return _json_text(doc)


def _cmd_surface(cfg: RunConfig) -> str:
    p = cfg.params
    o = cfg.options
    etas = _linspace(o["eta_min"], o["eta_max"], o["eta_steps"])
    vels = _linspace(o["vel_min"], o["vel_max"], o["vel_steps"])
    records = grid_sweep({"eta": etas, "v_el": vels}, p,
                         optimize=o["optimize"], workers=cfg.workers)
    rows = []
    for rec in records:
        coords = dict(rec.coords)
        t_used = rec.t_opt if rec.t_opt is not None else rec.inputs.t
        k_orig = original_protocol_rate(rec.inputs).k
        rows.append((coords["eta"], coords["v_el"], t_used, rec.breakdown.k,
                     max(rec.breakdown.k, 0.0), k_orig))
    header = ["eta", "v_el", "t_opt", "k", "k_clamped", "k_original"]
    if cfg.fmt == "json":
        return _json_text([dict(zip(header, row)) for row in rows])
    return _csv_text(header, rows)


def _parse_t_list(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ConfigError(f"t_list: cannot parse {text!r}") from exc
    if not values:
        raise ConfigError("t_list is empty")
    return values


def _cmd_wigner(cfg: RunConfig) -> str:
    o = cfg.options
    alpha = complex(o["alpha_re"], o["alpha_im"])
    qs = _linspace(o["q_min"], o["q_max"], o["q_steps"])
    rows = [(t, q, coherent_wigner_section(alpha, t, q))
            for t in _parse_t_list(o["t_list"]) for q in qs]
    header = ["t", "q", "w"]
    if cfg.fmt == "json":
        return _json_text([dict(zip(header, row)) for row in rows])
    return _csv_text(header, rows)


def _cmd_pd_surface(cfg: RunConfig) -> str:
    p = cfg.params
    o = cfg.options
    ts = _linspace(o["t_min"], o["t_max"], o["t_steps"])
    lams = _linspace(o["lam_min"], o["lam_max"], o["lam_steps"])
    records = grid_sweep({"t": ts, "lam": lams}, p, optimize=False, workers=cfg.workers)
    rows = []
    for rec in records:
        coords = dict(rec.coords)
        rows.append((coords["t"], coords["lam"], rec.breakdown.p_d))
    header = ["t", "lam", "p_d"]
    if cfg.fmt == "json":
        return _json_text([dict(zip(header, row)) for row in rows])
    return _csv_text(header, rows)


def _cmd_verify(cfg: RunConfig) -> tuple[str, bool]:
    cutoff = int(cfg.options["cutoff"])
    bs_cutoff = int(cfg.options["bs_cutoff"])
    grid = [(v_a, t) for v_a in (2.0, 3.0, 5.0) for t in (0.3, 0.5, 0.7, 0.9)]

    prob_dev = 0.0
    cov_dev = 0.0
    purity_dev = 0.0
    for v_a, t in grid:
        state = fock.build_epr(v_a, cutoff)
        out, prob = fock.apply_zpc(state, t)
        prob_dev = max(prob_dev, abs(prob - success_probability(ZpcParams(v_a, t))))
        cm_oracle = fock.covariance_of(out)
        cm_closed = catalyzed_covariance(ZpcParams(v_a, t))
        cov_dev = max(
            cov_dev,
            abs(cm_oracle.x_aa - cm_closed.x_aa),
            abs(cm_oracle.x_bb - cm_closed.x_bb),
            abs(cm_oracle.x_ab - cm_closed.x_ab),
        )
        gaussian_purity = 1.0 / (cm_oracle.x_aa * cm_oracle.x_bb - cm_oracle.x_ab ** 2)
        purity_dev = max(purity_dev, abs(1.0 - gaussian_purity))

    bs_dev = 0.0
    for v_a in (2.0, 3.0):
        for t in (0.3, 0.5, 0.7, 0.9):
            state = fock.build_epr(v_a, bs_cutoff)
            out_diag, prob_diag = fock.apply_zpc(state, t)
            out_bs, prob_bs = fock.apply_zpc_via_bs(state, t)
            bs_dev = max(bs_dev,
                         abs(prob_diag - prob_bs),
                         float(np.max(np.abs(out_diag.amplitudes - out_bs.amplitudes))))

    checks = [
        ("success probability vs closed form", prob_dev, 1e-8),
        ("conditioned covariance vs closed form", cov_dev, 1e-6),
        ("explicit-BS path vs diagonal shortcut", bs_dev, 1e-10),
        ("post-catalysis Gaussian purity", purity_dev, 1e-8),
    ]
    lines = [f"catalysis verification (cutoff {cutoff}, BS cutoff {bs_cutoff})"]
    all_ok = True
    for name, dev, tol in checks:
        ok = dev <= tol
        all_ok = all_ok and ok
        lines.append(f"  {'PASS' if ok else 'FAIL'}  {name}: max deviation {dev:.3e} (tol {tol:.0e})")
    lines.append("all checks passed" if all_ok else "verification FAILED")
    return "\n".join(lines) + "\n", all_ok


def run(cfg: RunConfig) -> int:
    """Execute a resolved configuration; writes one artifact, returns exit status."""
    if cfg.subcommand == "verify":
        text, ok = _cmd_verify(cfg)
        _write(cfg.output, text)
        return 0 if ok else 3
    handler = {
        "rate": _cmd_rate,
        "sweep-distance": _cmd_sweep_distance,
        "optimize-t": _cmd_optimize_t,
        "max-noise": _cmd_max_noise,
        "max-distance": _cmd_max_distance,
        "surface": _cmd_surface,
        "wigner": _cmd_wigner,
        "pd-surface": _cmd_pd_surface,
    }[cfg.subcommand]
    _write(cfg.output, handler(cfg))
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_run_config(argv)
    except ConfigError as exc:
        print(f"zpcqkd: configuration error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"zpcqkd: domain error: {exc}", file=sys.stderr)
        return 2
    try:
        return run(cfg)
    except ConfigError as exc:
        print(f"zpcqkd: configuration error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, NonPhysicalCovariance, CutoffTooSmall) as exc:
        print(f"zpcqkd: domain error: {exc}", file=sys.stderr)
        return 2
    except SolverError as exc:
        print(f"zpcqkd: solver failure: {exc}", file=sys.stderr)
        return 3


def console_main() -> None:
    raise SystemExit(main())

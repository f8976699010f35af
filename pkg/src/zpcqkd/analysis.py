"""Optimizers, root solvers and grid sweeps over the key-rate model.

All solvers are deterministic.  The transmittance search runs a coarse grid
(insurance against non-unimodal slices) followed by golden-section refinement.
Root solvers bisect until both the coordinate tolerance and a key-rate
residual tolerance are met, so reported roots carry |K - target| <= 1e-7
bits/pulse regardless of the local slope.

Sweep points are independent; the engine optionally fans them out to a
process pool and always returns records in row-major order over the declared
axes, independent of worker count.
"""

from __future__ import annotations

import itertools
import math
import multiprocessing
from dataclasses import dataclass, fields, replace
from typing import Mapping, NamedTuple, Sequence

from .catalysis import variance_from_squeezing
from .channel import ProtocolParams
from .errors import (
    DomainError,
    NoKeyAtZeroDistance,
    NoKeyAtZeroNoise,
    SolverError,
)
from .keyrate import RateBreakdown, secret_key_rate

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

_PARAM_FIELDS = frozenset(f.name for f in fields(ProtocolParams))


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and budgets shared by the solvers."""

    t_grid_points: int = 199
    t_floor: float = 0.01
    refine_tol: float = 1e-5        # on T
    distance_tol_km: float = 1e-4   # on L_AB
    noise_tol_snu: float = 1e-6     # on the common excess noise
    rate_residual_tol: float = 1e-7  # on |K - target| at a returned root
    max_iter: int = 200
    max_grid_points: int = 10_000_000

    def __post_init__(self) -> None:
        if self.t_grid_points < 3:
            raise DomainError("t_grid_points must be >= 3")
        if not 0.0 < self.t_floor < 1.0:
            raise DomainError("t_floor must be in (0, 1)")
        for name in ("refine_tol", "distance_tol_km", "noise_tol_snu", "rate_residual_tol"):
            if not getattr(self, name) > 0.0:
                raise DomainError(f"{name} must be > 0")


@dataclass(frozen=True)
class SolverMeta:
    """Where a solver stopped: evaluation count, final bracket, residual."""

    iterations: int
    bracket: tuple[float, float]
    residual: float


@dataclass(frozen=True)
class SweepRecord:
    """One evaluated grid point: inputs snapshot, rate breakdown, optimizer trace.

    coords keeps the declared axis values verbatim so serialized sweeps show
    exact grid coordinates even for axes that map onto derived parameters.
    """

    inputs: ProtocolParams
    breakdown: RateBreakdown
    t_opt: float | None = None
    solver_meta: SolverMeta | None = None
    coords: tuple[tuple[str, float], ...] = ()


class TOptimum(NamedTuple):
    t_opt: float
    breakdown: RateBreakdown
    meta: SolverMeta


class RootSolution(NamedTuple):
    value: float
    meta: SolverMeta


DEFAULT_CONFIG = SolverConfig()


def _rate_at_t(p: ProtocolParams, t: float) -> RateBreakdown:
    return secret_key_rate(replace(p, t=t))


def optimize_t(p: ProtocolParams, cfg: SolverConfig = DEFAULT_CONFIG) -> TOptimum:
    """Maximize K over the catalysis transmittance t in [t_floor, 1].

    Ties (e.g. the degenerate v_a = 1 source, where K is independent of t)
    resolve toward t = 1, the no-catalysis boundary.
    """
    n = cfg.t_grid_points
    step = (1.0 - cfg.t_floor) / (n - 1)
    ts = [cfg.t_floor + i * step for i in range(n - 1)] + [1.0]
    best_i = 0
    best_k = -math.inf
    for i, t in enumerate(ts):
        k = _rate_at_t(p, t).k
        if k >= best_k:
            best_i, best_k = i, k
    evals = n

    a = ts[best_i - 1] if best_i > 0 else ts[0]
    b = ts[best_i + 1] if best_i < n - 1 else ts[-1]
    # golden-section ascent on the bracketing interval
    c = b - (b - a) * _INVPHI
    d = a + (b - a) * _INVPHI
    fc = _rate_at_t(p, c).k
    fd = _rate_at_t(p, d).k
    evals += 2
    while b - a > cfg.refine_tol and evals < cfg.max_iter + n:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INVPHI
            fc = _rate_at_t(p, c).k
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INVPHI
            fd = _rate_at_t(p, d).k
        evals += 1
    t_ref = (a + b) / 2.0
    br_ref = _rate_at_t(p, t_ref)
    if br_ref.k > best_k:
        t_opt, br = t_ref, br_ref
    else:  # refinement never beats the grid scan; ties keep the grid point
        t_opt, br = ts[best_i], _rate_at_t(p, ts[best_i])
    return TOptimum(t_opt, br, SolverMeta(evals, (a, b), b - a))


def _optimized_k(p: ProtocolParams, cfg: SolverConfig) -> float:
    return optimize_t(p, cfg).breakdown.k


def _with_l_ab(p: ProtocolParams, l_ab: float) -> ProtocolParams:
    return replace(p, l_ac=l_ab - p.l_bc)


def _bisect_decreasing(f, lo: float, hi: float, target: float,
                       coord_tol: float, cfg: SolverConfig) -> RootSolution:
    """Root of the decreasing f(x) = target; requires f(lo) > target > f(hi).

    Returns the largest examined x with f(x) >= target, tightened until both
    the coordinate and rate-residual tolerances hold.
    """
    f_lo = f(lo)
    iters = 0
    while iters < cfg.max_iter:
        width_ok = (hi - lo) <= coord_tol
        resid_ok = abs(f_lo - target) <= cfg.rate_residual_tol
        if width_ok and resid_ok:
            break
        mid = (lo + hi) / 2.0
        f_mid = f(mid)
        if f_mid >= target:
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        iters += 1
    else:
        raise SolverError(
            f"bisection did not converge in {cfg.max_iter} iterations "
            f"(bracket [{lo!r}, {hi!r}], residual {f_lo - target!r})"
        )
    return RootSolution(lo, SolverMeta(iters, (lo, hi), f_lo - target))


def max_distance(p: ProtocolParams, target_k: float,
                 cfg: SolverConfig = DEFAULT_CONFIG, *,
                 optimize: bool = True) -> RootSolution:
    """Largest total distance L_AB at which the t-optimized rate still meets target_k.

    l_bc stays fixed (0 in the reference asymmetric setup); l_ac is varied.
    optimize=False evaluates at the fixed transmittance p.t instead (e.g. the
    uncatalyzed protocol with t = 1).
    """
    def f(l_ab: float) -> float:
        q = _with_l_ab(p, l_ab)
        return _optimized_k(q, cfg) if optimize else secret_key_rate(q).k

    lo = p.l_bc
    if f(lo) <= target_k:
        raise NoKeyAtZeroDistance(
            f"rate at l_ac = 0 does not exceed the target {target_k!r}"
        )
    span = 50.0
    while f(lo + span) > target_k:
        span *= 2.0
        if span > 20000.0:
            raise SolverError("failed to bracket the target rate below 20000 km")
    return _bisect_decreasing(f, lo, lo + span, target_k, cfg.distance_tol_km, cfg)


def max_tolerable_noise(p: ProtocolParams,
                        cfg: SolverConfig = DEFAULT_CONFIG, *,
                        optimize: bool = True) -> RootSolution:
    """Largest common excess noise eps_a = eps_b with nonnegative t-optimized rate."""
    def f(eps: float) -> float:
        q = replace(p, eps_a=eps, eps_b=eps)
        return _optimized_k(q, cfg) if optimize else secret_key_rate(q).k

    if f(0.0) <= 0.0:
        raise NoKeyAtZeroNoise("no key at zero excess noise for these parameters")
    hi = 0.05
    while f(hi) > 0.0:
        hi *= 2.0
        if hi > 100.0:
            raise SolverError("failed to bracket the zero-rate noise below 100 SNU")
    return _bisect_decreasing(f, 0.0, hi, 0.0, cfg.noise_tol_snu, cfg)


def apply_axis(p: ProtocolParams, name: str, value: float) -> ProtocolParams:
    """Set one sweep coordinate; supports derived axes beyond the raw fields.

    l_ab: total distance (l_bc kept fixed); eps: common excess noise;
    lam: source squeezing parameter, mapped onto v_a.
    """
    if name == "l_ab":
        return _with_l_ab(p, value)
    if name == "eps":
        return replace(p, eps_a=value, eps_b=value)
    if name == "lam":
        return replace(p, v_a=variance_from_squeezing(value))
    if name in _PARAM_FIELDS:
        return replace(p, **{name: value})
    raise DomainError(f"unknown sweep axis {name!r}")


def _sweep_point(task) -> SweepRecord:
    p_base, names, combo, optimize, cfg = task
    p = p_base
    for name, value in zip(names, combo):
        p = apply_axis(p, name, value)
    coords = tuple(zip(names, combo))
    if optimize:
        t_opt, br, meta = optimize_t(p, cfg)
        return SweepRecord(inputs=replace(p, t=t_opt), breakdown=br,
                           t_opt=t_opt, solver_meta=meta, coords=coords)
    return SweepRecord(inputs=p, breakdown=secret_key_rate(p), coords=coords)


def grid_sweep(axes: Mapping[str, Sequence[float]], p_base: ProtocolParams,
               optimize: bool = False, cfg: SolverConfig = DEFAULT_CONFIG,
               workers: int = 1) -> list[SweepRecord]:
    """Evaluate the Cartesian product of the axes, row-major in declaration order.

    Output ordering and content are independent of worker count.
    """
    if not axes:
        raise DomainError("grid_sweep needs at least one axis")
    names = list(axes)
    value_lists = [list(axes[name]) for name in names]
    total = math.prod(len(v) for v in value_lists)
    if total == 0:
        raise DomainError("grid_sweep axes must be nonempty")
    if total > cfg.max_grid_points:
        raise DomainError(
            f"grid of {total} points exceeds the cap of {cfg.max_grid_points}"
        )
    tasks = [(p_base, names, combo, optimize, cfg)
             for combo in itertools.product(*value_lists)]
    if workers <= 1 or total == 1:
        return [_sweep_point(t) for t in tasks]
    with multiprocessing.Pool(workers) as pool:
        return pool.map(_sweep_point, tasks)

"""Truncated-Fock-space realization of the catalysis, independent of the Gaussian layer.

States live on a (N+1) x (N+1) amplitude grid over photon numbers (n1, n2),
with explicit bookkeeping of the probability mass lost to truncation.  The
catalysis is available through two independent routes:

* apply_zpc: the diagonal multiplier sqrt(T)^(n2), i.e. the noiseless
  attenuation operator acting directly on mode-2 photon numbers;
* apply_zpc_via_bs: an explicit beam-splitter unitary on (mode 2 x ancilla
  vacuum), built by exponentiating the hopping generator and projecting the
  ancilla back onto vacuum.  The generator conserves total photon number, so
  the matrix exponential is exact on the truncated space.

Agreement between the two validates the operator identity rather than
assuming it.  Quadrature second moments of zero-mean states convert the
amplitudes into the covariance triple used everywhere else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import CutoffTooSmall, DomainError
from .gaussian import TwoModeCovariance

# Largest beyond-cutoff probability mass a state may carry before moment
# extraction (and EPR construction) refuses to proceed.
DEFECT_BUDGET = 1e-6


@dataclass(frozen=True)
class TruncatedState:
    """Two-mode pure state amplitudes up to a photon-number cutoff.

    amplitudes[n1, n2] is the coefficient of |n1, n2>; norm_defect is the
    squared norm truncated away, so sum |amplitudes|^2 + norm_defect = 1.
    """

    amplitudes: np.ndarray
    cutoff: int
    norm_defect: float

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (self.cutoff + 1, self.cutoff + 1):
            raise DomainError(
                f"amplitude grid {self.amplitudes.shape} does not match cutoff {self.cutoff}"
            )


def build_epr(v_a: float, cutoff: int) -> TruncatedState:
    """Two-mode squeezed vacuum of variance v_a, truncated at the cutoff.

    Coefficients are sqrt(1 - lam^2) lam^n on |n, n>, lam^2 = (v_a-1)/(v_a+1);
    the geometric tail gives norm_defect = lam^(2(cutoff+1)) exactly.
    """
    if not v_a >= 1.0:
        raise DomainError(f"v_a must be >= 1 SNU, got {v_a!r}")
    if cutoff < 1:
        raise DomainError(f"cutoff must be >= 1, got {cutoff!r}")
    lam_sq = (v_a - 1.0) / (v_a + 1.0)
    defect = lam_sq ** (cutoff + 1)
    if defect > DEFECT_BUDGET:
        raise CutoffTooSmall(
            f"cutoff {cutoff} leaves defect {defect:.3e} > {DEFECT_BUDGET:.0e} "
            f"for v_a = {v_a!r}"
        )
    amps = np.zeros((cutoff + 1, cutoff + 1), dtype=np.complex128)
    n = np.arange(cutoff + 1)
    amps[n, n] = math.sqrt(1.0 - lam_sq) * np.sqrt(lam_sq) ** n
    return TruncatedState(amps, cutoff, defect)


def _condition(scaled: np.ndarray, state: TruncatedState, t: float) -> tuple[TruncatedState, float]:
    """Renormalize post-selection amplitudes; returns (state, success probability).

    The truncated tail carried at least cutoff+1 photons in mode 2, so its
    surviving mass is bounded by norm_defect * t^(cutoff+1); that bound is
    used as the conditioned state's defect.
    """
    kept = float(np.sum(np.abs(scaled) ** 2))
    tail = state.norm_defect * t ** (state.cutoff + 1)
    prob = kept + tail
    out = TruncatedState(scaled / math.sqrt(prob), state.cutoff, tail / prob)
    return out, prob


def apply_zpc(state: TruncatedState, t: float) -> tuple[TruncatedState, float]:
    """Zero-photon catalysis as the diagonal attenuation sqrt(t)^(n2)."""
    if not 0.0 < t <= 1.0:
        raise DomainError(f"t must be in (0, 1], got {t!r}")
    factors = np.sqrt(t) ** np.arange(state.cutoff + 1)
    return _condition(state.amplitudes * factors[np.newaxis, :], state, t)


def _bs_vacuum_projection(cutoff: int, t: float) -> np.ndarray:
    """Matrix W[m, n] = <m, 0| B(t) |n, 0> from the exponentiated hopping generator."""
    dim = cutoff + 1
    a = np.diag(np.sqrt(np.arange(1, dim)), 1)  # annihilation, (dim, dim)
    gen = np.kron(a.T, a) - np.kron(a, a.T)     # a2^dag d - a2 d^dag
    theta = math.acos(math.sqrt(t))
    b = expm(theta * gen)
    # rows/cols with the ancilla in vacuum: flat index n*dim + 0
    idx = np.arange(dim) * dim
    return b[np.ix_(idx, idx)]


def apply_zpc_via_bs(state: TruncatedState, t: float) -> tuple[TruncatedState, float]:
    """Catalysis through the explicit beam-splitter unitary; validates apply_zpc.

    Intended for modest cutoffs (the unitary is dense on the squared space).
    """
    if not 0.0 < t <= 1.0:
        raise DomainError(f"t must be in (0, 1], got {t!r}")
    w = _bs_vacuum_projection(state.cutoff, t)
    return _condition(state.amplitudes @ w.T, state, t)


def covariance_of(state: TruncatedState) -> TwoModeCovariance:
    """Quadrature covariance triple (X, Y, Z) from ladder-operator moments.

    Valid for zero-mean states with quadrature-symmetric marginals (the EPR
    family before and after catalysis): X = 2<n1> + 1, Y = 2<n2> + 1,
    Z = 2 Re <a1 a2>.
    """
    if state.norm_defect > DEFECT_BUDGET:
        raise CutoffTooSmall(
            f"norm defect {state.norm_defect:.3e} exceeds {DEFECT_BUDGET:.0e}"
        )
    c = state.amplitudes
    prob = np.abs(c) ** 2
    norm = float(prob.sum())
    n = np.arange(state.cutoff + 1)
    mean_n1 = float((prob.sum(axis=1) * n).sum()) / norm
    mean_n2 = float((prob.sum(axis=0) * n).sum()) / norm
    root = np.sqrt(np.outer(n[1:], n[1:]))
    a1a2 = complex((np.conj(c[:-1, :-1]) * c[1:, 1:] * root).sum()) / norm
    return TwoModeCovariance(
        2.0 * mean_n1 + 1.0,
        2.0 * mean_n2 + 1.0,
        2.0 * a1a2.real,
    )

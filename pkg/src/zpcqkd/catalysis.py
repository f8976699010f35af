"""Zero-photon catalysis on one arm of an EPR source.

Conditioning a beam splitter (transmittance T) on a no-click event in an
ancillary vacuum mode acts as the noiseless attenuation sqrt(T)^(a'a) on the
transmitted mode.  Applied to one arm of a two-mode squeezed state of variance
V_A it succeeds with probability

    P_d = 2 / (1 + T + R V_A),        R = 1 - T,

and leaves a pure EPR state with squeezing lambda*sqrt(T), i.e. covariance

    x = y = (2 V_A - R V_A + R) / (1 + T + R V_A),
    z     = 2 sqrt(T (V_A^2 - 1)) / (1 + T + R V_A).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .gaussian import TwoModeCovariance

TWO_OVER_PI = 2.0 / math.pi


@dataclass(frozen=True)
class ZpcParams:
    """EPR variance (SNU) and beam-splitter transmittance of the catalysis stage."""

    v_a: float
    t: float

    def __post_init__(self) -> None:
        if not self.v_a >= 1.0:
            raise DomainError(f"v_a must be >= 1 SNU, got {self.v_a!r}")
        if not 0.0 < self.t <= 1.0:
            raise DomainError(f"t must be in (0, 1], got {self.t!r}")


def squeezing_parameter(v_a: float) -> float:
    """lambda = sqrt((V_A - 1)/(V_A + 1)), the Fock-coefficient ratio of the EPR state."""
    if not v_a >= 1.0:
        raise DomainError(f"v_a must be >= 1 SNU, got {v_a!r}")
    return math.sqrt((v_a - 1.0) / (v_a + 1.0))


def variance_from_squeezing(lam: float) -> float:
    """Inverse of squeezing_parameter: V_A = (1 + lambda^2)/(1 - lambda^2)."""
    if not 0.0 <= lam < 1.0:
        raise DomainError(f"squeezing parameter must be in [0, 1), got {lam!r}")
    return (1.0 + lam * lam) / (1.0 - lam * lam)


def success_probability(p: ZpcParams) -> float:
    """No-click probability of the catalysis detector."""
    r = 1.0 - p.t
    return 2.0 / (1.0 + p.t + r * p.v_a)


def catalyzed_covariance(p: ZpcParams) -> TwoModeCovariance:
    """Covariance of the post-catalysis state; pure EPR with squeezing lambda*sqrt(T)."""
    r = 1.0 - p.t
    den = 1.0 + p.t + r * p.v_a
    # x >= 1 holds exactly (x = (1 + lam^2 T)/(1 - lam^2 T)); the quotient can
    # still round one ulp below 1 when v_a is within a few ulps of 1
    x = max((2.0 * p.v_a - r * p.v_a + r) / den, 1.0)
    z = 2.0 * math.sqrt(p.t * (p.v_a * p.v_a - 1.0)) / den
    return TwoModeCovariance(x, x, z)


def coherent_wigner_section(alpha: complex, t: float, q: float) -> float:
    """Wigner density W(q, p=0) of the attenuated coherent state |sqrt(T) alpha>.

    Peak height 2/pi independent of T; peak sits at q = sqrt(T) Re(alpha).
    """
    if not 0.0 < t <= 1.0:
        raise DomainError(f"t must be in (0, 1], got {t!r}")
    if not (math.isfinite(q) and math.isfinite(alpha.real) and math.isfinite(alpha.imag)):
        raise DomainError("alpha and q must be finite")
    rt = math.sqrt(t)
    dq = q - rt * alpha.real
    dp = rt * alpha.imag
    return TWO_OVER_PI * math.exp(-2.0 * (dq * dq + dp * dp))

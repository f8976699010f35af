"""Asymptotic secret key rate of the catalyzed protocol (reverse reconciliation).

The post-channel two-mode covariance is

    X = x,   Y = T_c (x + chi_tot),   Z = sqrt(T_c) z,

with (x, z) the catalyzed source covariance and (T_c, chi_tot) the equivalent
one-way channel.  The rate per pulse is

    K = P_d { beta I(A:B) - chi(B:E) },

where the catalysis success probability P_d multiplies the full bracket.
K is returned raw (possibly negative); clamping is a presentation concern.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
import math

from .catalysis import ZpcParams, catalyzed_covariance, success_probability
from .channel import ProtocolParams, derive_channel
from .errors import DomainError
from .gaussian import (
    TwoModeCovariance,
    holevo_bound,
    mutual_information,
    symplectic_spectrum,
)


@dataclass(frozen=True)
class RateBreakdown:
    """Key rate with its ingredients; k == p_d * (beta*i_ab - chi_be) exactly."""

    p_d: float
    i_ab: float
    chi_be: float
    k: float
    lambda1: float
    lambda2: float
    lambda3: float
    cm_out: TwoModeCovariance


def output_covariance(p: ProtocolParams) -> TwoModeCovariance:
    """Covariance shared by Alice and Bob after catalysis and the equivalent channel."""
    src = catalyzed_covariance(ZpcParams(p.v_a, p.t))
    ch = derive_channel(p)
    x = src.x_aa
    # Y = T_c (x - 1) + 1 + T_c eps_th + 2 T_c chi_hom / T_A >= 1 termwise, but
    # the (1 - T_c)/T_c round trip can shave an ulp at the vacuum corner
    y = max(ch.t_c * (x + ch.chi_tot), 1.0)
    z = math.sqrt(ch.t_c) * src.x_ab
    return TwoModeCovariance(x, y, z)


def secret_key_rate(p: ProtocolParams) -> RateBreakdown:
    """Asymptotic secret key rate (bits/pulse) with the full breakdown."""
    p_d = success_probability(ZpcParams(p.v_a, p.t))
    cm = output_covariance(p)
    spec = symplectic_spectrum(cm)
    i_ab = mutual_information(cm)
    chi_be = holevo_bound(cm)
    k = p_d * (p.beta * i_ab - chi_be)
    return RateBreakdown(
        p_d=p_d, i_ab=i_ab, chi_be=chi_be, k=k,
        lambda1=spec.lambda1, lambda2=spec.lambda2, lambda3=spec.lambda3,
        cm_out=cm,
    )


def original_protocol_rate(p: ProtocolParams) -> RateBreakdown:
    """Rate of the uncatalyzed protocol: t forced to 1, so P_d = 1 and x = V_A."""
    return secret_key_rate(replace(p, t=1.0))


def plob_bound(tau: float) -> float:
    """Repeaterless secret-key capacity -log2(1 - tau) of a lossy channel."""
    if not 0.0 < tau < 1.0:
        raise DomainError(f"end-to-end transmittance must be in (0, 1), got {tau!r}")
    return -math.log2(1.0 - tau)

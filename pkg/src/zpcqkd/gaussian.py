"""Two-mode Gaussian covariance math: symplectic spectra, entropy, information measures.

All variances are in shot-noise units (vacuum quadrature variance = 1).
Every state this package produces is symmetric under quadrature exchange and
fits the block form

    [[X I2, Z sz], [Z sz, Y I2]],   sz = diag(1, -1),

so a covariance matrix is carried as the scalar triple (X, Y, Z).  For this
family the symplectic spectrum has the closed form

    lam_{1,2}^2 = (D +/- sqrt(D^2 - 4 xi^2)) / 2,
    D = X^2 + Y^2 - 2 Z^2,   xi = X Y - Z^2,

and the spectrum of mode A conditioned on a heterodyne measurement of mode B
collapses to the scalar lam3 = X - Z^2 / (Y + 1).

Numerical notes: the discriminant is evaluated in the factored form
(X - Y)^2 ((X + Y)^2 - 4 Z^2) and the smaller eigenvalue via lam2 = |xi|/lam1.
The naive D^2 - 4 xi^2 loses ~11 digits near pure states (X = Y, Z^2 = X^2-1,
e.g. X = 40) and yields lam2 below the purity tolerance, which the factored
form avoids entirely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NonPhysicalCovariance

# Symplectic eigenvalues this close below 1 are snapped to exactly 1 so that
# G((lam-1)/2) never sees a negative argument at the pure-state boundary.
PURITY_TOL = 1e-9

# Computed discriminants in [-DISC_TOL, 0) are treated as 0 (degenerate spectra).
DISC_TOL = 1e-12


@dataclass(frozen=True)
class TwoModeCovariance:
    """Symmetric two-mode covariance in (X, Y, Z) block form, SNU.

    x_aa, x_bb: per-mode quadrature variances (>= 1).
    x_ab: cross-mode correlation entering with the sigma_z sign pattern.
    """

    x_aa: float
    x_bb: float
    x_ab: float

    def __post_init__(self) -> None:
        if not (self.x_aa >= 1.0 and self.x_bb >= 1.0):
            raise NonPhysicalCovariance(
                f"mode variances must be >= 1 SNU, got ({self.x_aa!r}, {self.x_bb!r})"
            )
        if self.x_ab * self.x_ab > self.x_aa * self.x_bb:
            raise NonPhysicalCovariance(
                f"correlation {self.x_ab!r} violates x_ab^2 <= x_aa*x_bb"
            )


@dataclass(frozen=True)
class SymplecticSpectrum:
    """Symplectic eigenvalues of a two-mode state plus the heterodyne-conditional one."""

    lambda1: float
    lambda2: float
    lambda3: float

    def __post_init__(self) -> None:
        if self.lambda1 < self.lambda2:
            raise NonPhysicalCovariance("lambda1 < lambda2 breaks canonical ordering")


def _snap_unit(lam: float) -> float:
    """Snap eigenvalues in [1 - PURITY_TOL, 1) to 1; reject anything lower."""
    if lam < 1.0 - PURITY_TOL:
        raise NonPhysicalCovariance(f"symplectic eigenvalue {lam!r} below 1")
    return 1.0 if lam < 1.0 else lam


def symplectic_eigenvalues(cm: TwoModeCovariance) -> tuple[float, float]:
    """Symplectic eigenvalues (lam1, lam2), lam1 >= lam2 >= 1, of the two-mode state."""
    x, y, z = cm.x_aa, cm.x_bb, cm.x_ab
    delta = x * x + y * y - 2.0 * z * z
    xi = x * y - z * z
    # (X-Y)^2 ((X+Y)^2 - 4Z^2) == delta^2 - 4 xi^2, but stable for X ~ Y.
    s = x + y
    disc = (x - y) * (x - y) * (s * s - 4.0 * z * z)
    if disc < -DISC_TOL:
        raise NonPhysicalCovariance(f"negative spectral discriminant {disc!r}")
    lam1 = math.sqrt((delta + math.sqrt(max(disc, 0.0))) / 2.0)
    lam2 = abs(xi) / lam1 if lam1 > 0.0 else 0.0  # lam1*lam2 = |xi| exactly
    if lam2 > lam1:  # possible by 1 ulp when the spectrum is degenerate
        lam1, lam2 = lam2, lam1
    return _snap_unit(lam1), _snap_unit(lam2)


def conditional_eigenvalue(cm: TwoModeCovariance) -> float:
    """Symplectic eigenvalue of mode A after a heterodyne measurement of mode B."""
    lam3 = cm.x_aa - cm.x_ab * cm.x_ab / (cm.x_bb + 1.0)
    return _snap_unit(lam3)


def symplectic_spectrum(cm: TwoModeCovariance) -> SymplecticSpectrum:
    lam1, lam2 = symplectic_eigenvalues(cm)
    return SymplecticSpectrum(lam1, lam2, conditional_eigenvalue(cm))


def von_neumann_G(varsigma: float) -> float:
    """Entropy of a thermal mode with mean photon number varsigma, in bits.

    G(v) = (v+1) log2(v+1) - v log2 v, with G(0) = 0 by continuity.
    """
    if varsigma < 0.0:
        raise DomainError(f"von_neumann_G needs a nonnegative argument, got {varsigma!r}")
    if varsigma == 0.0:
        return 0.0
    return (varsigma + 1.0) * math.log2(varsigma + 1.0) - varsigma * math.log2(varsigma)


def mutual_information(cm: TwoModeCovariance) -> float:
    """Shannon mutual information (bits) of dual heterodyne readouts of the two modes."""
    num = (cm.x_aa + 1.0) * (cm.x_bb + 1.0)
    den = num - cm.x_ab * cm.x_ab
    if den <= 0.0:
        raise NonPhysicalCovariance(f"conditional variance {den!r} not positive")
    return math.log2(num / den)


def holevo_bound(cm: TwoModeCovariance) -> float:
    """Eavesdropper information bound (bits) for reverse reconciliation.

    chi = G((lam1-1)/2) + G((lam2-1)/2) - G((lam3-1)/2), with Eve purifying the
    two-mode state and mode B measured by heterodyne.
    """
    spec = symplectic_spectrum(cm)
    return (
        von_neumann_G((spec.lambda1 - 1.0) / 2.0)
        + von_neumann_G((spec.lambda2 - 1.0) / 2.0)
        - von_neumann_G((spec.lambda3 - 1.0) / 2.0)
    )

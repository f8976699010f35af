"""Independent oracle implementations used to validate the library paths.

Everything here deliberately avoids the library's closed forms: symplectic
spectra come from dense 4x4 eigenproblems, the equivalent excess noise from
the unminimized gain expression, the post-channel covariance from a
high-precision mpmath pipeline, and mutual information from conditional
variances.
"""

from __future__ import annotations

import math

import mpmath as mp
import numpy as np

OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])
OMEGA_2 = np.block([
    [OMEGA_1, np.zeros((2, 2))],
    [np.zeros((2, 2)), OMEGA_1],
])
SIGMA_Z = np.diag([1.0, -1.0])


def dense_covariance(x: float, y: float, z: float) -> np.ndarray:
    """4x4 covariance in (x1, p1, x2, p2) ordering from the block triple."""
    return np.block([
        [x * np.eye(2), z * SIGMA_Z],
        [z * SIGMA_Z, y * np.eye(2)],
    ])


def dense_symplectic_eigenvalues(x: float, y: float, z: float) -> tuple[float, float]:
    """Moduli of the eigenvalues of i Omega Gamma, paired and sorted descending."""
    gamma = dense_covariance(x, y, z)
    moduli = np.sort(np.abs(np.linalg.eigvals(1j * OMEGA_2 @ gamma)))[::-1]
    return float(moduli[0]), float(moduli[2])


def dense_conditional_eigenvalue(x: float, y: float, z: float) -> float:
    """Symplectic eigenvalue of mode A after heterodyne on B, via the Schur complement."""
    gamma = dense_covariance(x, y, z)
    a = gamma[:2, :2]
    b = gamma[2:, 2:]
    c = gamma[:2, 2:]
    cond = a - c @ np.linalg.inv(b + np.eye(2)) @ c.T
    return float(math.sqrt(np.linalg.det(cond)))


def _g_bits(nu: float) -> float:
    """Thermal entropy in bits of a symplectic eigenvalue nu >= 1."""
    v = (nu - 1.0) / 2.0
    if v <= 0.0:
        return 0.0
    return (v + 1.0) * math.log2(v + 1.0) - v * math.log2(v)


def dense_holevo(x: float, y: float, z: float) -> float:
    """Holevo bound from the dense spectra (library formulas bypassed)."""
    l1, l2 = dense_symplectic_eigenvalues(x, y, z)
    l3 = dense_conditional_eigenvalue(x, y, z)
    return _g_bits(l1) + _g_bits(l2) - _g_bits(l3)


def conditional_variance_mutual_information(x: float, y: float, z: float) -> float:
    """I(A:B) from heterodyne conditional variances instead of the closed form."""
    v_am = (x + 1.0) / 2.0
    v_bm = (y + 1.0) / 2.0
    cov = z / 2.0
    return math.log2(v_am / (v_am - cov * cov / v_bm))


def random_physical_cm(rng: np.random.Generator,
                       v_max: float = 61.0) -> tuple[float, float, float]:
    """Sample a physical (X, Y, Z) triple; boundary |Z| = Z_max means nu2 = 1."""
    x = rng.uniform(1.0, v_max)
    y = rng.uniform(1.0, v_max)
    z_max = math.sqrt(max(x * y - 1.0 - abs(x - y), 0.0))
    return x, y, rng.uniform(-1.0, 1.0) * z_max


def eps_th_with_gain(g: float, v_b: float, t_a: float, t_b: float,
                     eps_a: float, eps_b: float) -> float:
    """Equivalent excess noise before the gain is optimized away."""
    chi_a = (1.0 - t_a) / t_a + eps_a
    chi_b = (1.0 - t_b) / t_b + eps_b
    mismatch = (math.sqrt(2.0 * v_b - 2.0) / g - math.sqrt(t_b * v_b + t_b)) ** 2
    return mismatch / t_a + t_b * (chi_b - 1.0) / t_a + chi_a + 1.0


def optimal_gain_sq(v_b: float, t_b: float) -> float:
    return 2.0 * (v_b - 1.0) / (t_b * (v_b + 1.0))


def mp_output_covariance(v_a, v_b, l_ac, l_bc, eps_a, eps_b, eta, v_el, kappa, t):
    """Post-channel (X, Y, Z) recomputed end to end at 50 significant digits.

    Inputs convert through mp.mpf(float), which is exact for binary doubles.
    """
    with mp.workdps(50):
        v_a, v_b, l_ac, l_bc = map(mp.mpf, (v_a, v_b, l_ac, l_bc))
        eps_a, eps_b, eta, v_el = map(mp.mpf, (eps_a, eps_b, eta, v_el))
        kappa, t = mp.mpf(kappa), mp.mpf(t)
        t_a = mp.mpf(10) ** (-kappa * l_ac / 10)
        t_b = mp.mpf(10) ** (-kappa * l_bc / 10)
        g_sq = 2 * (v_b - 1) / (t_b * (v_b + 1))
        t_c = g_sq * t_a / 2
        eps_th = (t_b / t_a) * (eps_b - 2) + eps_a + 2 / t_a
        chi_hom = (v_el + 1 - eta) / eta
        chi_tot = (1 - t_c) / t_c + eps_th + 2 * chi_hom / t_a
        r = 1 - t
        den = 1 + t + r * v_a
        x = (2 * v_a - r * v_a + r) / den
        z = 2 * mp.sqrt(t * (v_a * v_a - 1)) / den
        return float(x), float(t_c * (x + chi_tot)), float(mp.sqrt(t_c) * z)


def brute_force_t_opt(rate_fn, t_floor: float = 0.01, n: int = 10_000) -> tuple[float, float]:
    """Exhaustive transmittance scan; rate_fn maps t -> K."""
    best_t, best_k = t_floor, -math.inf
    for i in range(n):
        t = t_floor + (1.0 - t_floor) * i / (n - 1)
        k = rate_fn(t)
        if k >= best_k:
            best_t, best_k = t, k
    return best_t, best_k

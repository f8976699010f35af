"""Secret key rates of zero-photon-catalysis CV-MDI-QKD.

Layering: gaussian (covariance math) -> catalysis (source conditioning) ->
channel (relay-to-one-way reduction) -> keyrate (rate assembly) -> analysis
(solvers and sweeps) -> cli (artifacts).  fock is an independent truncated
Fock-space check of the catalysis closed forms.
"""

from .analysis import (
    SolverConfig,
    SolverMeta,
    SweepRecord,
    grid_sweep,
    max_distance,
    max_tolerable_noise,
    optimize_t,
)
from .catalysis import (
    ZpcParams,
    catalyzed_covariance,
    coherent_wigner_section,
    squeezing_parameter,
    success_probability,
    variance_from_squeezing,
)
from .channel import (
    EquivalentChannel,
    ProtocolParams,
    derive_channel,
    link_transmittance,
    validate_one_mode_assumption,
)
from .errors import (
    CutoffTooSmall,
    DomainError,
    NoKeyAtZeroDistance,
    NoKeyAtZeroNoise,
    NonPhysicalCovariance,
    SolverError,
)
from .gaussian import (
    SymplecticSpectrum,
    TwoModeCovariance,
    conditional_eigenvalue,
    holevo_bound,
    mutual_information,
    symplectic_eigenvalues,
    symplectic_spectrum,
    von_neumann_G,
)
from .keyrate import (
    RateBreakdown,
    original_protocol_rate,
    output_covariance,
    plob_bound,
    secret_key_rate,
)

__all__ = [
    "CutoffTooSmall",
    "DomainError",
    "EquivalentChannel",
    "NoKeyAtZeroDistance",
    "NoKeyAtZeroNoise",
    "NonPhysicalCovariance",
    "ProtocolParams",
    "RateBreakdown",
    "SolverConfig",
    "SolverError",
    "SolverMeta",
    "SweepRecord",
    "SymplecticSpectrum",
    "TwoModeCovariance",
    "ZpcParams",
    "catalyzed_covariance",
    "coherent_wigner_section",
    "conditional_eigenvalue",
    "derive_channel",
    "grid_sweep",
    "holevo_bound",
    "link_transmittance",
    "max_distance",
    "max_tolerable_noise",
    "mutual_information",
    "optimize_t",
    "original_protocol_rate",
    "output_covariance",
    "plob_bound",
    "secret_key_rate",
    "squeezing_parameter",
    "success_probability",
    "symplectic_eigenvalues",
    "symplectic_spectrum",
    "validate_one_mode_assumption",
    "variance_from_squeezing",
    "von_neumann_G",
]

__version__ = "0.1.0"

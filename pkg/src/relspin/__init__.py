"""Covariant spin density matrices for massive spin-1/2 particles.

Minkowski and SL(2,C) kinematics, the chiral bispinor representation, the
momentum-space intertwiner, covariant reduced density matrices with their
decomposition and von Neumann entropy, relativistic EPR-Bohm correlation
functions, and classical BMT spin precession with its slow-motion limit.
"""

from .lorentz import (
    METRIC,
    OnShellMomentum,
    WignerRotation,
    lambda_of_sl2c,
    minkowski_dot,
    sl2c_boost,
    standard_boost,
    wigner_rotation,
)
from .dirac import (
    PauliLubanskiOps,
    bispinor_rep,
    gammas,
    lorentz_generators,
    pauli_lubanski,
    spin_matrix,
    spin_spectrum,
)
from .intertwiner import dirac_residual, energy_projector, gram, v_of, vbar, weinberg_residual
from .density import (
    Ensemble,
    SharpState,
    SpinDecomposition,
    decompose,
    entropy,
    mean_w,
    normalize_theta,
    omega_of_ensemble,
    omega_sharp,
    reconstruct,
    sigma_average,
    theta_of,
    transform_omega,
)
from .epr import (
    TwoParticleState,
    correlation_closed,
    correlation_from_omega,
    correlation_trace,
    named_configuration,
    omega_two,
    singlet_coeffs,
    special_config_correlation,
)
from .bmt import (
    EMField,
    IntegrationError,
    LimitReport,
    ParticleParams,
    SpinKinState,
    Trajectory,
    bmt_rhs,
    dual_tensor,
    field_tensor,
    integrate,
    integrate_slow,
    limit_consistency,
    slow_motion_rhs,
)

__version__ = "0.1.0"

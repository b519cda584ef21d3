"""Numerical symbol calculus for the Dirac equation.

Subsystems: exact Dirac-matrix algebra (:mod:`~diracsym.matrices`,
:mod:`~diracsym.dirac`), potential models (:mod:`~diracsym.fields`),
finite-difference symbol calculus (:mod:`~diracsym.symbols`), classical
phase-space flows (:mod:`~diracsym.flow`), kappa-vector spin transport
(:mod:`~diracsym.spin`), plane-wave observable propagation
(:mod:`~diracsym.planewave`), and the spectral projections of the shifted
wave operator (:mod:`~diracsym.spectral`).
"""

__version__ = "0.1.0"

from .matrices import (  # noqa: F401
    DiracSet, GWDecomp, RADIATION, SIGMA, STANDARD,
    clifford_residual, gw_compose, gw_decompose, make_dirac_set, pauli_dot,
)
from .fields import (  # noqa: F401
    PlaneWave, PotentialModel, SmoothedCoulomb, UniformB, ZeroField,
    field_B, field_E,
)
from .dirac import (  # noqa: F401
    bracket_norm, diagonalizer_upsilon, eigen_lambda, eigencolumns,
    projection_p, restrict_to_eigenspace, symbol_h, zeta,
)
from .symbols import (  # noqa: F401
    MatrixSymbol, leibniz_adjoint, leibniz_product, order_probe,
    poisson_bracket, solve_commutator,
)
from .flow import (  # noqa: F401
    PhasePoint, Trajectory, hamilton_rhs, integrate_flow, lorentz_residual,
    transport_scalar, velocity_from_zeta, zeta_from_velocity,
)
from .spin import (  # noqa: F401
    KappaState, b_tilde, field_F, integrate_kappa, kappa_rhs_consistency,
    spin_corrected_symbol, spin_kappa_matrix, spin_kappa_vector, theta_numeric,
)
from .planewave import (  # noqa: F401
    FourierSymbol, PlaneWaveConfig, compton_speed, d1_heisenberg_symbol,
    first_correction_z, fourier_adjoint, gamma_t, k_symbol,
    momentum_representation, second_correction_z_plusminus, shift_symbol,
    split_pm, symmetrize, translation_conjugation_residual, x_op, z_op,
)
from .spectral import (  # noqa: F401
    TransverseParams, cd_functions, eigenfunction, greens_kernel,
    p_q_matrices, proj_block_symbols, rho, substitution_consistency,
)

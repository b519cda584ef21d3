"""The Dirac matrix symbol, its eigenstructure, projections and diagonalizer.

The symbol of the Dirac operator is

    h(t, x, xi) = sum_j alpha_j (xi_j - A_j(t, x)) + beta + V(t, x),

a self-adjoint 4x4 matrix with the two double eigenvalues
lambda_+- = V +- <xi - A>, where <z> = sqrt(1 + |z|^2).
"""

from __future__ import annotations

import numpy as np

from .fields import PotentialModel
from .matrices import I2, I4, DiracSet, STANDARD, make_dirac_set, pauli_dot

_STD = make_dirac_set(STANDARD)


def bracket_norm(z) -> float:
    """<z> = sqrt(1 + |z|^2)."""
    z = np.asarray(z)
    return float(np.sqrt(1.0 + np.real(z @ np.conj(z))))


def zeta(model: PotentialModel, t: float, x, xi) -> np.ndarray:
    """Kinetic momentum zeta = xi - A(t, x)."""
    return np.asarray(xi, dtype=float) - model.A(t, np.asarray(x, dtype=float))


def symbol_h(ds: DiracSet, model: PotentialModel, t: float, x, xi) -> np.ndarray:
    """Evaluate h(t, x, xi); satisfies (h - V)^2 = <xi - A>^2 * identity."""
    z = zeta(model, t, x, xi)
    h = model.V(t, np.asarray(x, dtype=float)) * I4.copy() + ds.beta
    for j in range(3):
        h += ds.alpha[j] * z[j]
    return h


def eigen_lambda(model: PotentialModel, t: float, x, xi) -> tuple[float, float]:
    """The two eigenvalues (lambda_+, lambda_-) of h, each of multiplicity 2."""
    v = model.V(t, np.asarray(x, dtype=float))
    az = bracket_norm(zeta(model, t, x, xi))
    return v + az, v - az


def projection_p(sign: int, model: PotentialModel, t: float, x, xi,
                 ds: DiracSet = _STD) -> np.ndarray:
    """Spectral projection p_+- = (1 +- (h - V)/<xi - A>) / 2 of h."""
    s = 1 if sign > 0 else -1
    z = zeta(model, t, x, xi)
    az = bracket_norm(z)
    hz = ds.beta + sum(ds.alpha[j] * z[j] for j in range(3))
    return 0.5 * (I4 + s * hz / az)


def free_projection(sign: int, xi, ds: DiracSet) -> np.ndarray:
    """p_+-(xi) for vanishing potentials (any Dirac set)."""
    xi = np.asarray(xi, dtype=float)
    az = bracket_norm(xi)
    h0 = ds.beta + sum(ds.alpha[j] * xi[j] for j in range(3))
    s = 1 if sign > 0 else -1
    return 0.5 * (I4 + s * h0 / az)


def _u_parts(model: PotentialModel, t: float, x, xi):
    z = zeta(model, t, x, xi)
    az = bracket_norm(z)
    return z / az, 1.0 / az  # u, u0


def diagonalizer_upsilon(model: PotentialModel, t: float, x, xi) -> np.ndarray:
    """Unitary Upsilon with Upsilon* h Upsilon = V + <xi - A> beta.

    Valid for the standard (beta-diagonal) Dirac set:
    Upsilon = (1 + u0 - beta alpha.u) / sqrt(2 (1 + u0)).
    """
    u, u0 = _u_parts(model, t, x, xi)
    bau = sum((_STD.beta @ _STD.alpha[j]) * u[j] for j in range(3))
    return ((1.0 + u0) * I4 - bau) / np.sqrt(2.0 * (1.0 + u0))


def eigencolumns(sign: int, model: PotentialModel, t: float, x, xi) -> np.ndarray:
    """4x2 matrix of eigenvectors of h to lambda_+- (standard set).

    Columns have squared length 2 (1 + u0) and are mutually orthogonal:
    Upsilon_+ = (1 + u0; -i sigma.u), Upsilon_- = (-i sigma.u; 1 + u0)
    in 2x2 block notation.
    """
    u, u0 = _u_parts(model, t, x, xi)
    su = pauli_dot(u)
    cols = np.zeros((4, 2), dtype=complex)
    if sign > 0:
        cols[0:2] = (1.0 + u0) * I2
        cols[2:4] = -1j * su
    else:
        cols[0:2] = -1j * su
        cols[2:4] = (1.0 + u0) * I2
    return cols


def restrict_to_eigenspace(q: np.ndarray, sign: int, model: PotentialModel,
                           t: float, x, xi) -> np.ndarray:
    """2x2 matrix of p q p in the eigenbasis given by the eigencolumns.

    kappa = Upsilon_s^* q Upsilon_s / (2 (1 + u0)); the projections are
    absorbed because the columns span the eigenspace.
    """
    _, u0 = _u_parts(model, t, x, xi)
    cols = eigencolumns(sign, model, t, x, xi)
    return cols.conj().T @ q @ cols / (2.0 * (1.0 + u0))


def reconstruct_from_eigenspace(kappa: np.ndarray, sign: int, model: PotentialModel,
                                t: float, x, xi) -> np.ndarray:
    """Inverse of :func:`restrict_to_eigenspace` onto the eigenspace.

    Returns sum_jl kappa_jl p_jl = p q p for kappa the restriction of q.
    """
    _, u0 = _u_parts(model, t, x, xi)
    cols = eigencolumns(sign, model, t, x, xi)
    return cols @ kappa @ cols.conj().T / (2.0 * (1.0 + u0))

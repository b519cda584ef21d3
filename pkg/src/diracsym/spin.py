"""Relativistic transport of eigenspace kappa-vectors (spin/magnetic moment).

The 2x2 representation kappa of an observable in an eigenspace of the Dirac
symbol precesses along the classical orbit: kappa' = -F x kappa with an
effective field F built from B and x' x E.  The Theta matrix driving the
rotation is evaluated two ways: by finite differences of the eigenbasis along
the flow direction, and from the closed-form field; their agreement is the
central oracle of this module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import bracket_norm, eigencolumns, projection_p, zeta
from .errors import SuperluminalInput
from .fields import PotentialModel, field_B, field_E
from .flow import PhasePoint, hamilton_rhs, integrate_rk45, velocity_from_zeta
from .matrices import SIGMA, pauli_dot
from .symbols import MatrixSymbol, fd_partial

DEFAULT_TOL = 1e-10


def field_F_from(z, E, B) -> np.ndarray:
    """The precession field as an explicit function of (zeta, E, B)."""
    z = np.asarray(z, dtype=float)
    E = np.asarray(E, dtype=float)
    B = np.asarray(B, dtype=float)
    az = bracket_norm(z)
    zb = float(z @ B)
    first = (-np.cross(z, E) + ((z @ z) * B - zb * z) / az) / (az * (1.0 + az))
    second = (B + zb * z / (1.0 + az)) / az**2
    return first - second


def field_F(model: PotentialModel, t: float, x, xi) -> np.ndarray:
    """Closed-form precession field F(x, xi).

    F = (−zeta x E + (|zeta|^2 B − (zeta.B) zeta)/<zeta>) / (<zeta>(1+<zeta>))
        − (B + (zeta.B) zeta/(1+<zeta>)) / <zeta>^2,   zeta = xi − A(x).
    """
    x = np.asarray(x, dtype=float)
    z = zeta(model, t, x, xi)
    return field_F_from(z, field_E(model, t, x), field_B(model, t, x))


def b_tilde(E, B, v) -> np.ndarray:
    """B~ = B + (v x E) / (1 + sqrt(1 - v^2)) for a particle velocity v."""
    v = np.asarray(v, dtype=float)
    v2 = float(v @ v)
    if v2 >= 1.0:
        raise SuperluminalInput(f"|v| = {np.sqrt(v2):.17g} >= 1")
    return np.asarray(B, float) + np.cross(v, np.asarray(E, float)) / (1.0 + np.sqrt(1.0 - v2))


def b_tilde_effective(E, B, v) -> np.ndarray:
    """The velocity-form field exactly equivalent to F: B~ minus a transverse-B term.

    B~_eff = B~ - 2 (1 - sqrt(1 - v^2)) B_perp with B_perp the component of B
    perpendicular to v; then -F x kappa = sqrt(1 - v^2) (B~_eff x kappa).
    The transverse weakening is the strength anomaly between the electric and
    magnetic couplings of the moment vector.
    """
    v = np.asarray(v, dtype=float)
    B = np.asarray(B, dtype=float)
    out = b_tilde(E, B, v)
    v2 = float(v @ v)
    if v2 > 0.0:
        b_perp = B - (float(v @ B) / v2) * v
        out = out - 2.0 * (1.0 - np.sqrt(1.0 - v2)) * b_perp
    return out


def _lambda_gradients(sign: int, model: PotentialModel, t: float, x, xi):
    s = 1.0 if sign > 0 else -1.0
    z = zeta(model, t, x, xi)
    az = bracket_norm(z)
    lam_xi = s * z / az
    lam_x = model.grad_V(t, np.asarray(x, float)) - s * (model.jac_A(t, x).T @ z) / az
    return lam_xi, lam_x


def _flow_derivative(sym: MatrixSymbol, sign: int, model: PotentialModel,
                     t: float, x, xi) -> np.ndarray:
    """Directional derivative along the sign-branch Hamiltonian flow.

    d/dt = sum_k lambda|xi_k d/dx_k - lambda|x_k d/dxi_k for time-independent
    models (the only ones admitted here).
    """
    lam_xi, lam_x = _lambda_gradients(sign, model, t, x, xi)
    out = None
    for k in range(3):
        term = lam_xi[k] * fd_partial(sym, "x", k, t, x, xi) \
            - lam_x[k] * fd_partial(sym, "xi", k, t, x, xi)
        out = term if out is None else out + term
    return out


def theta_numeric(sign: int, model: PotentialModel, t: float, p: PhasePoint,
                  fd_step: float = 1e-5) -> np.ndarray:
    """The 2x2 Theta matrix by finite differences of the eigenbasis.

    Theta = (Y* Y' - 2 s <zeta> Y* (sum_k p|xi_k p|x_k) Y) / (2 (1 + u0)),
    with Y the 4x2 eigencolumns of the sign branch and the prime the
    derivative along this branch's flow.  Only the traceless part carries
    meaning; the scalar part depends on normalization choices.
    """
    if model.time_dependent:
        raise ValueError("theta_numeric requires a time-independent model")
    s = 1.0 if sign > 0 else -1.0
    x, xi = p.x, p.xi
    z = zeta(model, t, x, xi)
    az = bracket_norm(z)
    u0 = 1.0 / az

    cols = MatrixSymbol(lambda tt, xx, xxi: eigencolumns(sign, model, tt, xx, xxi),
                        fd_step=fd_step)
    proj = MatrixSymbol(lambda tt, xx, xxi: projection_p(sign, model, tt, xx, xxi),
                        fd_step=fd_step)

    y = eigencolumns(sign, model, t, x, xi)
    dy = _flow_derivative(cols, sign, model, t, x, xi)

    pp = np.zeros((4, 4), dtype=complex)
    for k in range(3):
        pp += fd_partial(proj, "xi", k, t, x, xi) @ fd_partial(proj, "x", k, t, x, xi)

    raw = y.conj().T @ dy - 2.0 * s * az * (y.conj().T @ pp @ y)
    return raw / (2.0 * (1.0 + u0))


def theta_tilde_paths(sign: int, model: PotentialModel, t: float, p: PhasePoint,
                      fd_step: float = 1e-5) -> tuple[np.ndarray, np.ndarray]:
    """The first Theta term computed two ways: Omega* Y' and -(Omega')* Y.

    Omega = Y / (2 (1 + u0)) is the dual frame with Omega* Y = 1, so the two
    paths agree identically; their finite-difference mismatch calibrates the
    derivative noise floor.
    """
    x, xi = p.x, p.xi

    def omega(tt, xx, xxi):
        u0 = 1.0 / bracket_norm(zeta(model, tt, xx, xxi))
        return eigencolumns(sign, model, tt, xx, xxi) / (2.0 * (1.0 + u0))

    cols = MatrixSymbol(lambda tt, xx, xxi: eigencolumns(sign, model, tt, xx, xxi),
                        fd_step=fd_step)
    om = MatrixSymbol(omega, fd_step=fd_step)

    first = omega(t, x, xi).conj().T @ _flow_derivative(cols, sign, model, t, x, xi)
    second = -_flow_derivative(om, sign, model, t, x, xi).conj().T \
        @ eigencolumns(sign, model, t, x, xi)
    return first, second


def traceless(a: np.ndarray) -> np.ndarray:
    return a - (np.trace(a) / a.shape[0]) * np.eye(a.shape[0], dtype=complex)


def theta_closed_form(model: PotentialModel, t: float, p: PhasePoint) -> np.ndarray:
    """-(i/2) sigma . F with the closed-form field; the traceless oracle for Theta."""
    return -0.5j * pauli_dot(field_F(model, t, p.x, p.xi))


@dataclass
class KappaState:
    """Garding-Wightman data transported along an orbit.

    The scalar part kappa0 is a constant of motion; the vector part precesses
    with conserved length.
    """

    vec: np.ndarray
    kappa0: float = 0.0


def kappa_rhs(sign: int, model: PotentialModel, t: float, p: PhasePoint,
              kvec: np.ndarray) -> np.ndarray:
    """dkappa/dtau = -sign F(x, xi) x kappa along the sign-branch orbit."""
    s = 1.0 if sign > 0 else -1.0
    return -s * np.cross(field_F(model, t, p.x, p.xi), kvec)


def integrate_kappa(sign: int, model: PotentialModel, p0: PhasePoint,
                    k0: KappaState, t: float, tol: float = DEFAULT_TOL,
                    sample_times=None):
    """Co-integrate the flow and the kappa precession for time t.

    Returns the final KappaState, or (states, trajectory arrays) when
    ``sample_times`` is given.  |kappa| is conserved up to integrator error.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def rhs(tt, y):
        p = PhasePoint(y[:3], y[3:6])
        dx, dxi = hamilton_rhs(sign, model, tt, p)
        dk = kappa_rhs(sign, model, tt, p, y[6:9])
        return np.concatenate([dx, dxi, dk])

    y0 = np.concatenate([p0.x, p0.xi, np.asarray(k0.vec, dtype=float)])
    sol = integrate_rk45(rhs, 0.0, y0, t, rtol=tol, atol=tol,
                         sample_times=sample_times)
    if sample_times is not None:
        return sol.sampled_ts, sol.sampled_ys
    yf = sol.ys[-1]
    return KappaState(vec=yf[6:9].copy(), kappa0=k0.kappa0)


def precess_frozen(F, k0, t: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Rotate a vector by dk/dtau = -F x k for constant F (frozen-field harness)."""
    F = np.asarray(F, dtype=float)

    def rhs(tt, k):
        return -np.cross(F, k)

    sol = integrate_rk45(rhs, 0.0, np.asarray(k0, float), t, rtol=tol, atol=tol)
    return sol.ys[-1]


def kappa_rhs_consistency(sign: int, model: PotentialModel, t: float,
                          p: PhasePoint, rng=None, n_kappa: int = 8) -> float:
    """Residual between the xi-form and velocity-form precession laws.

    Compares -sign F x kappa against -sign sqrt(1 - v^2) (kappa x B~_eff)
    with v from the velocity-momentum relation; an algebraic identity, so the
    residual is at rounding level.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    s = 1.0 if sign > 0 else -1.0
    z = zeta(model, t, p.x, p.xi)
    v = velocity_from_zeta(z)
    E = field_E(model, t, p.x)
    B = field_B(model, t, p.x)
    F = field_F(model, t, p.x, p.xi)
    beff = b_tilde_effective(E, B, v)
    root = np.sqrt(1.0 - float(v @ v))

    worst = 0.0
    for _ in range(n_kappa):
        k = rng.normal(size=3)
        k /= np.linalg.norm(k)
        r_xi = -s * np.cross(F, k)
        r_v = -s * root * np.cross(k, beff)
        worst = max(worst, float(np.max(np.abs(r_xi - r_v))))
    return worst


def spin_kappa_matrix(j: int, v) -> np.ndarray:
    """2x2 eigenspace matrix of the spin component S_j at velocity v.

    kappa^j = (1/2) sqrt(1-v^2) { sigma_j + v_j (v.sigma) /
    (sqrt(1-v^2)(1+sqrt(1-v^2))) }; identical for both branches.
    """
    v = np.asarray(v, dtype=float)
    v2 = float(v @ v)
    if v2 >= 1.0:
        raise SuperluminalInput(f"|v| = {np.sqrt(v2):.17g} >= 1")
    root = np.sqrt(1.0 - v2)
    return 0.5 * root * (SIGMA[j - 1] + v[j - 1] * pauli_dot(v) / (root * (1.0 + root)))


def spin_kappa_vector(j: int, v) -> np.ndarray:
    """Garding-Wightman vector of spin_kappa_matrix; component l is
    (1/2) sqrt(1-v^2) { delta_jl + v_j v_l / (sqrt(1-v^2)(1+sqrt(1-v^2))) }."""
    v = np.asarray(v, dtype=float)
    v2 = float(v @ v)
    if v2 >= 1.0:
        raise SuperluminalInput(f"|v| = {np.sqrt(v2):.17g} >= 1")
    root = np.sqrt(1.0 - v2)
    ej = np.zeros(3)
    ej[j - 1] = 1.0
    return 0.5 * root * (ej + v[j - 1] * v / (root * (1.0 + root)))


def spin_matrix(j: int) -> np.ndarray:
    """S_j = diag(sigma_j, sigma_j) / 2 in the standard representation."""
    out = np.zeros((4, 4), dtype=complex)
    out[0:2, 0:2] = 0.5 * SIGMA[j - 1]
    out[2:4, 2:4] = 0.5 * SIGMA[j - 1]
    return out


def spin_corrected_symbol(model: PotentialModel, t: float, x, xi, j: int) -> np.ndarray:
    """The commuting part p+ S_j p+ + p- S_j p- of the spin observable.

    Unlike S_j itself this symbol commutes with h(x, xi) for every potential,
    which makes it the natural corrected spin.
    """
    sj = spin_matrix(j)
    pp = projection_p(+1, model, t, x, xi)
    pm = projection_p(-1, model, t, x, xi)
    return pp @ sj @ pp + pm @ sj @ pm

"""Spectral data of the shifted plane-wave operator K = H(0) - D_1.

After Fourier transform in the transverse variables, K reduces to a 2x2-block
ODE operator on the x1-line whose generalized eigenfunctions, Green-type
kernels and spectral projections are explicit.  The projections appear as
left-right symbols p(x, y, xi) whose four 2x2 blocks are algebraic in the
sliding averages c, d of the vector potential.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import QuadratureFailure, ZeroLambda, ZeroMu
from .matrices import I2, SIGMA
from .planewave import PlaneWaveConfig, _sinc
from .quadrature import tanh_sinh


@dataclass(frozen=True)
class TransverseParams:
    """Fixed transverse momenta after the x2, x3 Fourier transform."""

    xi2: float
    xi3: float
    cfg: PlaneWaveConfig


def a2_pot(params: TransverseParams, x1: float) -> float:
    """The scalar vector-potential component A_2(x1) = eps0 sin(omega x1)."""
    return params.cfg.epsilon0 * np.sin(params.cfg.omega * x1)


def p_q_matrices(params: TransverseParams, x1: float):
    """The 2x2 factors p, q of the reduced operator.

    p = sigma3 (xi2 - A2) + sigma2 xi3 - i, q = the same + i; their product
    is the scalar <P>^2 = 1 + (xi2 - A2)^2 + xi3^2.
    """
    pm = SIGMA[2] * (params.xi2 - a2_pot(params, x1)) + SIGMA[1] * params.xi3
    return pm - 1j * I2, pm + 1j * I2


def p_bracket2(params: TransverseParams, x1: float) -> float:
    """<P(x1)>^2 = 1 + (xi2 - A2(x1))^2 + xi3^2."""
    return 1.0 + (params.xi2 - a2_pot(params, x1)) ** 2 + params.xi3**2


def rho(params: TransverseParams, x1: float) -> float:
    """rho(x1) = integral_0^{x1} <P>^2, in closed form."""
    e0 = params.cfg.epsilon0
    w = params.cfg.omega
    xi2 = params.xi2
    return ((1.0 + xi2**2 + params.xi3**2 + 0.5 * e0**2) * x1
            - 2.0 * xi2 * e0 * (1.0 - np.cos(w * x1)) / w
            - 0.25 * e0**2 * np.sin(2.0 * w * x1) / w)


def cd_functions(params: TransverseParams, x1: float, y1: float):
    """Sliding averages of A_2 and A_2^2 over [y1, x1], and a^2 = 1 + d - c^2.

    c = eps0 sin(w (x1+y1)/2) sinc(w (x1-y1)/2),
    d = eps0^2/2 - (eps0^2/2) cos(w (x1+y1)) sinc(w (x1-y1));
    the sinc guard makes the coincidence diagonal smooth, where c = A_2 and
    d = A_2^2 so that a^2 = 1.
    """
    e0 = params.cfg.epsilon0
    w = params.cfg.omega
    c = e0 * np.sin(0.5 * w * (x1 + y1)) * np.real(_sinc(0.5 * w * (x1 - y1)))
    d = 0.5 * e0**2 * (1.0 - np.cos(w * (x1 + y1)) * np.real(_sinc(w * (x1 - y1))))
    return c, d, 1.0 + d - c * c


def iota2(params: TransverseParams, x1: float, y1: float) -> float:
    """The divided difference (rho(x1) - rho(y1))/(x1 - y1), smooth at x1 = y1."""
    c, d, _ = cd_functions(params, x1, y1)
    return 1.0 + params.xi2**2 + params.xi3**2 - 2.0 * params.xi2 * c + d


def eigenfunction(params: TransverseParams, lam: float, c2, x1: float) -> np.ndarray:
    """Generalized eigenfunction of the reduced K at spectral value lambda.

    psi = (i lam c, q(x1) c)^T exp(-i lam x1/2 + i rho(x1)/(2 lam)) with a
    constant spinor amplitude c; solves -2u' - i lam u = p v, q u = i lam v.
    """
    if lam == 0:
        raise ZeroLambda("eigenfunctions are defined for lambda != 0")
    c2 = np.asarray(c2, dtype=complex)
    _, q = p_q_matrices(params, x1)
    phase = np.exp(-0.5j * lam * x1 + 0.5j * rho(params, x1) / lam)
    out = np.empty(4, dtype=complex)
    out[0:2] = 1j * lam * c2 * phase
    out[2:4] = (q @ c2) * phase
    return out


def greens_kernel(j: int, params: TransverseParams, mu: float, x1: float,
                  tau: float, eps: float) -> complex:
    """Green-function-type kernels H^j of the resolvent difference.

    For eps > 0 the branch is lambda = mu - i eps on tau < x1 and the
    conjugate on tau > x1; H^{j+1} = H^1 / lambda^j.  At eps = 0 the two
    sides merge into exp(-(i/2)(x1 - tau)(mu - iota^2/mu)), continuous across
    tau = x1.
    """
    if j not in (1, 2, 3):
        raise ValueError("j must be 1, 2 or 3")
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    if eps == 0.0:
        if mu == 0.0:
            raise ZeroMu("the eps = 0 kernel carries a iota^2/mu phase (and "
                         "1/mu^{j-1} for j >= 2)")
        i2 = iota2(params, x1, tau)
        expo = -0.5j * (x1 - tau) * (mu - i2 / mu)
        return np.exp(expo) / mu ** (j - 1)
    lam = mu - 1j * eps if tau < x1 else mu + 1j * eps
    expo = -0.5j * (lam * (x1 - tau) - (rho(params, x1) - rho(params, tau)) / lam)
    return np.exp(expo) / lam ** (j - 1)


def gaussian_profile(center: float, width: float, cut: float = 8.0):
    """Gaussian spectral test profile with numerically compact support.

    Returns G(lam) = exp(-((lam-center)/width)^2) truncated at ``cut`` widths
    (level ~ e^{-64}); the ``lam_support`` attribute drives the quadratures.
    """

    def g(lam: float) -> float:
        u = (lam - center) / width
        return np.exp(-u * u) if abs(u) <= cut else 0.0

    g.lam_support = (center - cut * width, center + cut * width)
    return g


def substitution_consistency(params: TransverseParams, x1: float, tau: float,
                             G, branch: int, tol: float = 1e-8) -> float:
    """Check the lambda -> mu substitution of the spectral integrals.

    Computes the half-line lambda-integrals with weights 1, 1/lambda,
    1/lambda^2 and the transformed whole-line mu-integrals (with the Jacobian
    lambda dmu / sqrt(iota^2 + mu^2)) independently; returns the max absolute
    difference over the (1,1), (1,2), (2,2) components.
    """
    if branch not in (+1, -1):
        raise ValueError("branch must be +1 or -1")
    lo, hi = getattr(G, "lam_support", (-40.0, 40.0))
    if branch > 0:
        lo = max(lo, 1e-12)
        if hi <= lo:
            return 0.0
    else:
        hi = min(hi, -1e-12)
        if hi <= lo:
            return 0.0

    i2 = iota2(params, x1, tau)
    delta = x1 - tau

    def lam_integral(power):
        def f(lam):
            return np.exp(-0.5j * delta * (lam - i2 / lam)) * G(lam) / lam**power
        try:
            return tanh_sinh(f, lo, hi, tol=tol * 1e-2)
        except QuadratureFailure:
            raise

    # mu-range equals the image of the support under mu = (lam - iota^2/lam)/2.
    mu_lo = 0.5 * (lo - i2 / lo)
    mu_hi = 0.5 * (hi - i2 / hi)

    def mu_integral(kind):
        def f(mu):
            root = np.sqrt(i2 + mu * mu)
            lam = mu + root if branch > 0 else mu - root
            if kind == "11":
                w = 1.0 + mu / root if branch > 0 else 1.0 - mu / root
            elif kind == "12":
                w = 1.0 / root if branch > 0 else -1.0 / root
            else:  # "22"
                w = (root - mu) / (i2 * root) if branch > 0 else (root + mu) / (i2 * root)
            return w * np.exp(-1j * mu * delta) * G(lam)
        return tanh_sinh(f, mu_lo, mu_hi, tol=tol * 1e-2)

    worst = 0.0
    for kind, power in [("11", 0), ("12", 1), ("22", 2)]:
        worst = max(worst, abs(lam_integral(power) - mu_integral(kind)))
    return worst


@dataclass
class ProjectionBlockSymbol:
    """The four 2x2 blocks of a left-right projection symbol p(x, y, xi)."""

    p11: np.ndarray
    p12: np.ndarray
    p21: np.ndarray
    p22: np.ndarray

    def as_matrix(self) -> np.ndarray:
        out = np.zeros((4, 4), dtype=complex)
        out[0:2, 0:2] = self.p11
        out[0:2, 2:4] = self.p12
        out[2:4, 0:2] = self.p21
        out[2:4, 2:4] = self.p22
        return out


def proj_block_symbols(sign: int, params: TransverseParams, x1: float,
                       y1: float, xi1: float) -> ProjectionBlockSymbol:
    """Left-right block symbols of the spectral projections of K.

    With eta = (xi1, xi2 - c, xi3) and a^2 = 1 + d - c^2,

        p11 = (1 -+ xi1/R)/2,  p12 = +-(i/2) p(y1)/R,
        p21 = -+(i/2) q(x1)/R, p22 = (R +- xi1) q(x1) p(y1) / (2 (eta~^2+a^2) R),

    R = sqrt(eta^2 + a^2), eta~ the transverse part; upper signs for the
    electron projection.  All blocks are order-0 symbols.
    """
    s = 1.0 if sign > 0 else -1.0
    c, _, a2 = cd_functions(params, x1, y1)
    eta2_t = (params.xi2 - c) ** 2 + params.xi3**2
    R = np.sqrt(xi1**2 + eta2_t + a2)
    p_y = p_q_matrices(params, y1)[0]
    q_x = p_q_matrices(params, x1)[1]
    p11 = 0.5 * (1.0 - s * xi1 / R) * I2
    p12 = s * 0.5j * p_y / R
    p21 = -s * 0.5j * q_x / R
    p22 = 0.5 * (R + s * xi1) / ((eta2_t + a2) * R) * (q_x @ p_y)
    return ProjectionBlockSymbol(p11=p11, p12=p12, p21=p21, p22=p22)


def proj_block_replacement22(sign: int, params: TransverseParams, x1: float,
                             y1: float, xi1: float) -> np.ndarray:
    """The order-0 scalar stand-in (1 +- xi1/R)/2 for the 22 block."""
    s = 1.0 if sign > 0 else -1.0
    c, _, a2 = cd_functions(params, x1, y1)
    R = np.sqrt(xi1**2 + (params.xi2 - c) ** 2 + params.xi3**2 + a2)
    return 0.5 * (1.0 + s * xi1 / R) * I2


def free_blocks(sign: int, xi) -> ProjectionBlockSymbol:
    """Blocks of the free projection p_sign(xi) in the radiation representation."""
    s = 1.0 if sign > 0 else -1.0
    xi = np.asarray(xi, dtype=float)
    az = np.sqrt(1.0 + xi @ xi)
    pm = SIGMA[2] * xi[1] + SIGMA[1] * xi[2]
    p0 = pm - 1j * I2
    q0 = pm + 1j * I2
    return ProjectionBlockSymbol(
        p11=0.5 * (1.0 - s * xi[0] / az) * I2,
        p12=s * 0.5j * p0 / az,
        p21=-s * 0.5j * q0 / az,
        p22=0.5 * (1.0 + s * xi[0] / az) * I2,
    )


def leibniz_reduce_leading(blocksym, x1: float) -> np.ndarray:
    """Order-0 term of the left-right to left reduction: the symbol at y = x."""
    return np.asarray(blocksym(x1, x1), dtype=complex)


def leibniz_reduce_correction(blocksym, x1: float, xi1: float,
                              eval_at, h: float = 1e-4) -> np.ndarray:
    """First reduction correction -i d_y d_xi1 a(x, y, xi)|_{y=x} by central FD.

    ``eval_at(y1, xi1)`` must evaluate the block at fixed x1; only the
    (y1, xi1) pair contributes because the blocks depend on no other
    y-variable.
    """
    hy = h * (1.0 + abs(x1))
    hxi = h * (1.0 + abs(xi1))

    def dxi(y1):
        return (eval_at(y1, xi1 - 2 * hxi) - 8 * eval_at(y1, xi1 - hxi)
                + 8 * eval_at(y1, xi1 + hxi) - eval_at(y1, xi1 + 2 * hxi)) / (12 * hxi)

    dyx = (dxi(x1 - 2 * hy) - 8 * dxi(x1 - hy)
           + 8 * dxi(x1 + hy) - dxi(x1 + 2 * hy)) / (12 * hy)
    return -1j * dyx


def proj_vs_free_residual(sign: int, cfg: PlaneWaveConfig, radii, rng,
                          weight=True):
    """<xi>-weighted distance between the K projections and the free ones.

    For each |xi| on the grid a random direction and random (x1, y1) are
    drawn; the 22 block enters through its order-0 replacement.  Returns the
    per-radius weighted sups; boundedness (log-log slope <= 0.05) realizes
    the order -1 difference P_+- - p_+-(D).
    """
    radii = np.asarray(radii, dtype=float)
    out = np.empty_like(radii)
    period = 2 * np.pi / cfg.omega
    for i, r in enumerate(radii):
        d = rng.normal(size=3)
        d /= np.linalg.norm(d)
        xi = r * d
        params = TransverseParams(xi2=xi[1], xi3=xi[2], cfg=cfg)
        x1 = rng.uniform(-period, period)
        y1 = x1 + rng.uniform(-2.0, 2.0)
        blocks = proj_block_symbols(sign, params, x1, y1, xi[0])
        free = free_blocks(sign, xi)
        diff = max(
            float(np.max(np.abs(blocks.p11 - free.p11))),
            float(np.max(np.abs(blocks.p12 - free.p12))),
            float(np.max(np.abs(blocks.p21 - free.p21))),
            float(np.max(np.abs(proj_block_replacement22(sign, params, x1, y1, xi[0])
                                - free.p22))),
        )
        az = np.sqrt(1.0 + r * r)
        out[i] = az * diff if weight else diff
    return out

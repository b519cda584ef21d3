"""Pauli and Dirac matrices, Clifford-relation checks, Garding-Wightman decomposition.

Natural units throughout (hbar = c = m_e = |e| = 1); all matrices are exact
complex arrays with entries in {0, +-1, +-i}, so algebraic identities hold to
rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Pauli matrices.  Note the convention: sigma1 has entries +-i, sigma2 is the
# real symmetric one.  The triple satisfies sigma_j sigma_k = delta_jk + i eps_jkl sigma_l.
SIGMA = np.array(
    [
        [[0, 1j], [-1j, 0]],
        [[0, 1], [1, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)

STANDARD = "standard"
RADIATION = "radiation"


def _block(a, b, c, d) -> np.ndarray:
    return np.block([[a, b], [c, d]]).astype(complex)


@dataclass(frozen=True)
class DiracSet:
    """A concrete choice of the four 4x4 Dirac matrices.

    ``standard``: beta = diag(1, 1, -1, -1), used for the diagonalizer and
    spin transport.  ``radiation``: alpha1 = diag(-1, -1, 1, 1), convenient
    when the incoming radiation travels in the +x1 direction.
    """

    variant: str
    alpha: np.ndarray  # shape (3, 4, 4)
    beta: np.ndarray   # shape (4, 4)
    sigma: np.ndarray  # shape (3, 2, 2)


def make_dirac_set(variant: str = STANDARD) -> DiracSet:
    if variant == STANDARD:
        alpha = np.stack([_block(0 * I2, 1j * s, -1j * s, 0 * I2) for s in SIGMA])
        beta = _block(I2, 0 * I2, 0 * I2, -I2)
    elif variant == RADIATION:
        a1 = np.diag([-1, -1, 1, 1]).astype(complex)
        a2 = _block(0 * I2, 1j * SIGMA[2], -1j * SIGMA[2], 0 * I2)
        a3 = _block(0 * I2, 1j * SIGMA[1], -1j * SIGMA[1], 0 * I2)
        alpha = np.stack([a1, a2, a3])
        beta = _block(0 * I2, I2, I2, 0 * I2)
    else:
        raise ValueError(f"unknown Dirac-set variant {variant!r}")
    return DiracSet(variant=variant, alpha=alpha, beta=beta, sigma=SIGMA.copy())


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def matnorm(a: np.ndarray) -> float:
    """Frobenius norm, the default matrix norm for residual checks."""
    return float(np.linalg.norm(a))


def clifford_residual(ds: DiracSet) -> float:
    """Max deviation from the anticommutation relations over all matrix pairs.

    Checks alpha_j alpha_l + alpha_l alpha_j = 2 delta_jl, beta^2 = 1 and
    alpha_j beta + beta alpha_j = 0; zero exactly for both built-in sets.
    """
    res = 0.0
    for j in range(3):
        for l in range(3):
            target = 2 * I4 if j == l else np.zeros((4, 4))
            res = max(res, matnorm(anticommutator(ds.alpha[j], ds.alpha[l]) - target))
        res = max(res, matnorm(anticommutator(ds.alpha[j], ds.beta)))
    res = max(res, matnorm(ds.beta @ ds.beta - I4))
    return res


def selfadjoint_residual(ds: DiracSet) -> float:
    res = max(matnorm(a - dagger(a)) for a in ds.alpha)
    return max(res, matnorm(ds.beta - dagger(ds.beta)))


@dataclass(frozen=True)
class GWDecomp:
    """Garding-Wightman data of a 2x2 matrix: a = kappa0 + kappa . sigma."""

    kappa0: complex
    kappa: np.ndarray  # shape (3,), complex


def gw_decompose(a: np.ndarray) -> GWDecomp:
    """Split a 2x2 matrix into its scalar and Pauli-vector parts.

    kappa0 = trace(a)/2, kappa_j = trace(sigma_j a)/2; these are real exactly
    when ``a`` is self-adjoint.
    """
    kappa0 = complex(np.trace(a)) / 2
    kappa = np.array([complex(np.trace(SIGMA[j] @ a)) / 2 for j in range(3)])
    return GWDecomp(kappa0=kappa0, kappa=kappa)


def gw_compose(d: GWDecomp) -> np.ndarray:
    out = d.kappa0 * I2.copy()
    for j in range(3):
        out += d.kappa[j] * SIGMA[j]
    return out


def pauli_dot(v) -> np.ndarray:
    """sigma . v for a real or complex 3-vector v."""
    v = np.asarray(v)
    return v[0] * SIGMA[0] + v[1] * SIGMA[1] + v[2] * SIGMA[2]

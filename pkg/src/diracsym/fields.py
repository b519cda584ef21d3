"""Electromagnetic potential models with analytic derivatives.

Each model supplies the scalar potential V, the vector potential A, and their
analytic first derivatives; the fields follow as E = -dA/dt - grad V and
B = curl A.  Lengths are in electron Compton wavelengths, field strengths in
the natural units that absorb the elementary charge.
"""

from __future__ import annotations

import numpy as np


class PotentialModel:
    """Base class; concrete models override the potential callbacks.

    ``jac_A[j, k]`` is dA_j/dx_k.  Time-independent models return zeros from
    ``dA_dt`` and set ``time_dependent = False`` so that flow code may assert
    energy conservation.
    """

    name = "base"
    time_dependent = False
    test_only = False

    def V(self, t: float, x: np.ndarray) -> float:
        return 0.0

    def grad_V(self, t: float, x: np.ndarray) -> np.ndarray:
        return np.zeros(3)

    def A(self, t: float, x: np.ndarray) -> np.ndarray:
        return np.zeros(3)

    def jac_A(self, t: float, x: np.ndarray) -> np.ndarray:
        return np.zeros((3, 3))

    def dA_dt(self, t: float, x: np.ndarray) -> np.ndarray:
        return np.zeros(3)

    def curl_A(self, t: float, x: np.ndarray) -> np.ndarray:
        j = self.jac_A(t, x)
        return np.array([j[2, 1] - j[1, 2], j[0, 2] - j[2, 0], j[1, 0] - j[0, 1]])


class ZeroField(PotentialModel):
    name = "zero-field"


class SmoothedCoulomb(PotentialModel):
    """V(x) = -c_f / sqrt(|x|^2 + r0^2), A = 0.

    The regularization radius r0 > 0 removes the Coulomb singularity while
    keeping the order -1 decay of V and order -2 decay of grad V.
    """

    name = "smoothed-coulomb"

    def __init__(self, c_f: float = 1.0 / 137.0, r0: float = 0.1):
        if r0 <= 0:
            raise ValueError("r0 must be positive")
        self.c_f = c_f
        self.r0 = r0

    def V(self, t, x):
        return -self.c_f / np.sqrt(x @ x + self.r0**2)

    def grad_V(self, t, x):
        return self.c_f * x * (x @ x + self.r0**2) ** -1.5


class UniformB(PotentialModel):
    """Uniform magnetic field in symmetric gauge, A = B x x / 2, V = 0.

    The linear growth of A violates the order -1 decay assumed by the symbol
    classes; kept for tests of the precession machinery only.
    """

    name = "uniform-b"
    test_only = True

    def __init__(self, b):
        self.b = np.asarray(b, dtype=float)

    def A(self, t, x):
        return 0.5 * np.cross(self.b, x)

    def jac_A(self, t, x):
        bx, by, bz = self.b
        return 0.5 * np.array([[0.0, -bz, by], [bz, 0.0, -bx], [-by, bx, 0.0]])


class PlaneWave(PotentialModel):
    """A = (0, eps0 sin omega(x1 - t), 0), V = 0: plane-polarized wave along +x1."""

    name = "plane-wave"
    time_dependent = True

    def __init__(self, epsilon0: float, omega: float):
        if epsilon0 < 0:
            raise ValueError("epsilon0 must be nonnegative")
        if omega <= 0:
            raise ValueError("omega must be positive")
        self.epsilon0 = epsilon0
        self.omega = omega

    def A(self, t, x):
        return np.array([0.0, self.epsilon0 * np.sin(self.omega * (x[0] - t)), 0.0])

    def jac_A(self, t, x):
        j = np.zeros((3, 3))
        j[1, 0] = self.epsilon0 * self.omega * np.cos(self.omega * (x[0] - t))
        return j

    def dA_dt(self, t, x):
        return np.array(
            [0.0, -self.epsilon0 * self.omega * np.cos(self.omega * (x[0] - t)), 0.0]
        )


def field_E(model: PotentialModel, t: float, x) -> np.ndarray:
    """Electric field E = -dA/dt - grad V."""
    x = np.asarray(x, dtype=float)
    return -model.dA_dt(t, x) - model.grad_V(t, x)


def field_B(model: PotentialModel, t: float, x) -> np.ndarray:
    """Magnetic induction B = curl A."""
    return model.curl_A(t, np.asarray(x, dtype=float))

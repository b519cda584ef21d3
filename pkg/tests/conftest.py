import numpy as np
import pytest


def philox(seed: int) -> np.random.Generator:
    """Counter-based generator so that seeded draws are stable across platforms."""
    return np.random.Generator(np.random.Philox(seed))


@pytest.fixture
def rng():
    return philox(20240901)


def random_points(gen, n, x_scale=2.0, xi_scale=2.0):
    """Seeded phase-space sample points (x, xi)."""
    for _ in range(n):
        yield gen.normal(size=3) * x_scale, gen.normal(size=3) * xi_scale


def eig_oracle(h: np.ndarray):
    """Characteristic-polynomial eigenvalues of a 4x4 self-adjoint matrix
    known to have two double eigenvalues: mean +- sqrt(tr((h-mean)^2)/4)."""
    mean = np.trace(h).real / 4.0
    shifted = h - mean * np.eye(4)
    d = np.sqrt(np.trace(shifted @ shifted).real / 4.0)
    return mean + d, mean - d

import numpy as np

from diracsym.matrices import (
    RADIATION, SIGMA, STANDARD, GWDecomp, clifford_residual, dagger,
    gw_compose, gw_decompose, make_dirac_set, matnorm, pauli_dot,
    selfadjoint_residual,
)

from conftest import philox


def test_standard_set_layout():
    ds = make_dirac_set(STANDARD)
    assert np.array_equal(ds.beta, np.diag([1, 1, -1, -1]).astype(complex))


def test_radiation_set_layout():
    ds = make_dirac_set(RADIATION)
    assert np.array_equal(ds.alpha[0], np.diag([-1, -1, 1, 1]).astype(complex))
    expected_beta = np.zeros((4, 4), dtype=complex)
    expected_beta[0:2, 2:4] = np.eye(2)
    expected_beta[2:4, 0:2] = np.eye(2)
    assert np.array_equal(ds.beta, expected_beta)


def test_clifford_relations_exact():
    for variant in (STANDARD, RADIATION):
        ds = make_dirac_set(variant)
        assert clifford_residual(ds) == 0.0
        assert selfadjoint_residual(ds) == 0.0


def test_pauli_structure():
    # sigma_j sigma_k = delta_jk + i eps_jkl sigma_l for this triple
    eps = np.zeros((3, 3, 3))
    eps[0, 1, 2] = eps[1, 2, 0] = eps[2, 0, 1] = 1
    eps[0, 2, 1] = eps[2, 1, 0] = eps[1, 0, 2] = -1
    for j in range(3):
        for k in range(3):
            expect = (1.0 if j == k else 0.0) * np.eye(2, dtype=complex)
            for l in range(3):
                expect = expect + 1j * eps[j, k, l] * SIGMA[l]
            assert matnorm(SIGMA[j] @ SIGMA[k] - expect) == 0.0


def test_pauli_cross_identity():
    # (sigma.xi)(sigma.eta) = xi.eta + i sigma.(xi x eta)
    gen = philox(7)
    for _ in range(25):
        xi = gen.normal(size=3)
        eta = gen.normal(size=3)
        lhs = pauli_dot(xi) @ pauli_dot(eta)
        rhs = (xi @ eta) * np.eye(2) + 1j * pauli_dot(np.cross(xi, eta))
        assert matnorm(lhs - rhs) <= 1e-13


def test_gw_simple_cases():
    d = gw_decompose(SIGMA[2])
    assert abs(d.kappa0) == 0.0
    assert np.allclose(d.kappa, [0, 0, 1], atol=0)
    d = gw_decompose(np.eye(2, dtype=complex))
    assert d.kappa0 == 1.0
    assert np.allclose(d.kappa, 0, atol=0)


def test_gw_roundtrip_and_reality(rng):
    for _ in range(30):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        a = a + dagger(a)
        d = gw_decompose(a)
        assert matnorm(gw_compose(d) - a) <= 1e-14
        assert abs(d.kappa0.imag) <= 1e-14
        assert np.max(np.abs(d.kappa.imag)) <= 1e-14
        # round-trip starting from the decomposition side
        back = gw_decompose(gw_compose(GWDecomp(d.kappa0, d.kappa)))
        assert abs(back.kappa0 - d.kappa0) <= 1e-14

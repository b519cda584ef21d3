import numpy as np
import pytest
from scipy.integrate import quad

from diracsym.errors import CommutationViolation, GridError, ZeroMomentum
from diracsym.matrices import I4, dagger, matnorm
from diracsym.planewave import (
    FourierSymbol, PlaneWaveConfig, collision_wave_form, compton_speed,
    d1_fourier_symbol, d1_heisenberg_symbol, electron_shift_coefficient,
    first_correction_z, fourier_adjoint, gamma_t, h0, k_symbol,
    momentum_representation, ode_residual_commuting, p_free, s_comp,
    second_correction_z_plusminus, shift_symbol, split_pm, symmetrize,
    theta_of, translation_conjugation_residual, two_round_fourier_symbol,
    x_op, z_op,
)
from diracsym.quadrature import fit_loglog_slope


CFG = PlaneWaveConfig(epsilon0=0.3, omega=1.0)


def gamma_quad(xi, t, omega):
    """Quadrature oracle for the phase integral, independent of the closed form."""
    a = omega * (s_comp(1, xi) - 1.0)
    re = quad(lambda tau: np.cos(a * tau), 0.0, t, epsabs=1e-13, epsrel=1e-13)[0]
    im = quad(lambda tau: np.sin(a * tau), 0.0, t, epsabs=1e-13, epsrel=1e-13)[0]
    return re + 1j * im


def test_k_symbol_cases(rng):
    assert matnorm(k_symbol(PlaneWaveConfig(0.0, 1.0), 0.3, [0, 0, 0])
                   - CFG.ds.beta) == 0.0
    xi = np.array([0.7, -0.2, 1.1])
    assert matnorm(k_symbol(CFG, 0.0, xi) - (h0(xi) - xi[0] * I4)) == 0.0
    for _ in range(5):
        x1 = rng.uniform(-5, 5)
        xi = rng.normal(size=3)
        k = k_symbol(CFG, x1, xi)
        assert matnorm(k - dagger(k)) <= 1e-14


def test_translation_conjugation_free():
    cfg = PlaneWaveConfig(epsilon0=0.0, omega=1.0)
    assert translation_conjugation_residual(cfg, 0.7, 128) <= 1e-12


def test_translation_conjugation_wave():
    cfg = PlaneWaveConfig(epsilon0=0.3, omega=1.0)
    assert translation_conjugation_residual(cfg, 0.7, 256) <= 1e-10
    # a full period restores the potential exactly
    assert translation_conjugation_residual(cfg, 2 * np.pi, 256) <= 1e-12


def test_translation_conjugation_grid_validation():
    with pytest.raises(GridError):
        translation_conjugation_residual(CFG, 0.5, 100)


def test_x_op_cases():
    xi = np.array([0.9, 0.4, -0.3])
    assert matnorm(x_op(lambda x1, k: np.sin(x1) * I4, CFG, 0.7, xi)) == 0.0
    val = x_op(lambda x1, k: k[0] * I4, CFG, 0.7, xi)
    expect = 2 * CFG.omega * np.cos(CFG.omega * 0.7) * I4
    assert matnorm(val - expect) <= 1e-13


def test_x_op_order_drop():
    # X lowers the symbol order by one: for the order-1 symbols <xi> and xi_1
    # the image ||Xc|| itself stays bounded over two decades of |xi|
    def c_bracket(x1, k):
        return np.sqrt(1 + k @ k) * I4

    def c_xi1(x1, k):
        return k[0] * I4

    d = np.array([0.6, 0.64, 0.48])
    d /= np.linalg.norm(d)
    rs = np.logspace(1, 3, 9)
    for c in (c_bracket, c_xi1):
        vals = [matnorm(x_op(c, CFG, 0.4, r * d)) for r in rs]
        assert fit_loglog_slope(np.sqrt(1 + rs**2), vals) <= 0.05


def test_z_op_cases():
    xi = np.array([0.5, 1.2, -0.7])
    assert matnorm(z_op(lambda x1, k: I4.copy(), CFG, 0.9, xi)) <= 1e-15

    def q(x1, k):
        return (k @ k) * I4

    val = z_op(q, CFG, 0.9, xi)
    expect = 0.5 * CFG.epsilon0 * CFG.ds.alpha[1] @ x_op(q, CFG, 0.9, xi)
    assert matnorm(val - expect) <= 1e-13
    cfg0 = PlaneWaveConfig(0.0, 1.0)
    assert matnorm(z_op(lambda x1, k: np.diag([1, 2, 3, 4.0]).astype(complex),
                        cfg0, 0.9, xi)) == 0.0


def test_split_pm(rng):
    xi = np.array([1.0, 0.0, 0.0])
    # h0 commutes: no cross parts
    _, _, pm_, mp_ = split_pm(h0(xi), xi)
    assert matnorm(pm_) <= 1e-13
    assert matnorm(mp_) <= 1e-13
    # alpha_2 sandwiched at xi with s2 = 0 has vanishing ++ part
    app, _, _, _ = split_pm(CFG.ds.alpha[1], xi)
    assert matnorm(app) <= 1e-13
    for _ in range(5):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        k = rng.normal(size=3)
        parts = split_pm(a, k)
        assert matnorm(sum(parts) - a) <= 1e-13
        # commutator identities of the splitting
        az = np.sqrt(1 + k @ k)
        com = h0(k) @ a - a @ h0(k)
        _, _, com_pm, com_mp = split_pm(com, k)
        assert matnorm(com_pm - 2 * az * parts[2]) <= 1e-11
        assert matnorm(com_mp + 2 * az * parts[3]) <= 1e-11


def test_first_correction_scalar_q_vanishes():
    xi = np.array([0.8, 0.5, -0.1])
    zp, zm = first_correction_z(lambda k: k[0] * I4, CFG, 0.6, xi)
    assert matnorm(zp) <= 1e-14
    assert matnorm(zm) <= 1e-14


def test_first_correction_projection_q(rng):
    xi = np.array([0.8, 0.5, -0.1])
    zp, zm = first_correction_z(lambda k: p_free(+1, k), CFG, 0.6, xi)
    assert matnorm(zp) > 1e-3
    h = h0(xi)
    for z in (zp, zm):
        assert matnorm(h @ z + z @ h) <= 1e-11
    cfg0 = PlaneWaveConfig(0.0, 1.0)
    zp0, zm0 = first_correction_z(lambda k: p_free(+1, k), cfg0, 0.6, xi)
    assert matnorm(zp0) == 0.0 and matnorm(zm0) == 0.0


def test_first_correction_requires_commuting_q():
    xi = np.array([0.8, 0.5, -0.1])
    with pytest.raises(CommutationViolation):
        first_correction_z(lambda k: CFG.ds.alpha[1], CFG, 0.6, xi)


def test_gamma_closed_form_vs_quadrature(rng):
    assert gamma_t([1.0, 2.0, 0.3], 0.0, 1.0) == 0.0
    # full-period cancellation at s1 = 0
    assert abs(gamma_t([0.0, 1.5, 0.0], 2 * np.pi, 1.0)) <= 1e-12
    # forward limit: gamma -> t
    assert abs(gamma_t([1e8, 0, 0], 1.7, 1.0) - 1.7) <= 1e-6
    worst = 0.0
    for _ in range(25):
        xi = rng.normal(size=3) * 3
        t = rng.uniform(0, 8)
        w = rng.uniform(0.3, 2.5)
        worst = max(worst, abs(gamma_t(xi, t, w) - gamma_quad(xi, t, w)))
    assert worst <= 1e-10


def test_second_correction_transverse_momenta_invariant():
    xi = np.array([0.7, 1.1, -0.6])
    for j in (2, 3):
        zp, zm = second_correction_z_plusminus(
            lambda k, jj=j: k[jj - 1] * I4, CFG, 1.3, 0.5, xi)
        assert matnorm(zp) <= 1e-10
        assert matnorm(zm) <= 1e-10


def test_second_correction_matches_momentum_closed_form(rng):
    # for q = xi_1 the ++ correction is (eps0 w/2) s2 p+ (gamma e^{iwx} + cc)
    for _ in range(6):
        xi = rng.normal(size=3) * 2
        t = rng.uniform(0, 5)
        x1 = rng.uniform(-3, 3)
        zp, zm = second_correction_z_plusminus(lambda k: k[0] * I4, CFG, t, x1, xi)
        w = CFG.omega
        g = gamma_t(xi, t, w)
        coef = 0.5 * CFG.epsilon0 * w * s_comp(2, xi)
        expect_p = coef * 2 * np.real(g * np.exp(1j * w * x1)) * p_free(+1, xi)
        assert matnorm(zp - expect_p) <= 1e-11
        gm = gamma_t(-xi, t, w)
        expect_m = -coef * 2 * np.real(gm * np.exp(1j * w * x1)) * p_free(-1, xi)
        assert matnorm(zm - expect_m) <= 1e-11
        # sector confinement
        pp = p_free(+1, xi)
        pm = p_free(-1, xi)
        assert matnorm(zp - pp @ zp @ pp) <= 1e-10
        assert matnorm(zm - pm @ zm @ pm) <= 1e-10


def test_second_correction_t_zero():
    xi = np.array([0.7, 1.1, -0.6])
    zp, zm = second_correction_z_plusminus(lambda k: k[0] * I4, CFG, 0.0, 0.5, xi)
    assert matnorm(zp) == 0.0
    assert matnorm(zm) == 0.0


def test_d1_symbol_basic(rng):
    xi = np.array([0.4, 0.9, -0.2])
    assert matnorm(d1_heisenberg_symbol(CFG, 0.0, 0.7, xi) - xi[0] * I4) == 0.0
    cfg0 = PlaneWaveConfig(0.0, 1.0)
    assert matnorm(d1_heisenberg_symbol(cfg0, 3.1, 0.7, xi) - xi[0] * I4) == 0.0
    for _ in range(8):
        xi = rng.normal(size=3) * 2
        t = rng.uniform(0, 6)
        x1 = rng.uniform(-3, 3)
        a = d1_heisenberg_symbol(CFG, t, x1, xi)
        assert matnorm(a - dagger(a)) <= 1e-12
        # periodicity in x1
        period = 2 * np.pi / CFG.omega
        assert matnorm(a - d1_heisenberg_symbol(CFG, t, x1 + period, xi)) <= 1e-12
        # equals xi_1 plus the second-round corrections for q = xi_1
        zp, zm = second_correction_z_plusminus(lambda k: k[0] * I4, CFG, t, x1, xi)
        assert matnorm(a - (xi[0] * I4 + zp + zm)) <= 1e-10


def test_shift_symbol_identity_and_zero(rng):
    xi = np.array([0.4, 0.9, -0.2])
    assert matnorm(shift_symbol(CFG, 0.0, 0.7, xi)) == 0.0
    for _ in range(10):
        xi = rng.normal(size=3) * 2
        t = rng.uniform(0, 6)
        x1 = rng.uniform(-3, 3)
        lhs = shift_symbol(CFG, t, x1, xi)
        rhs = d1_heisenberg_symbol(CFG, t, x1, xi) - xi[0] * I4
        assert matnorm(lhs - rhs) <= 1e-12


def test_shift_symbol_sinc_zero():
    # electron part vanishes after a full period when s1 = 0 (sinc(pi) = 0)
    xi = np.array([0.0, 1.5, 0.0])
    t = 2 * np.pi / CFG.omega
    assert abs(electron_shift_coefficient(CFG, t, 0.9, xi)) <= 1e-14


def test_collision_identity(rng):
    worst = 0.0
    n = 0
    while n < 30:
        xi = rng.normal(size=3) * 3
        if theta_of(xi) < 0.05:
            continue
        n += 1
        t = rng.uniform(0, 6)
        x1 = rng.uniform(-3, 3)
        worst = max(worst, abs(electron_shift_coefficient(CFG, t, x1, xi)
                               - collision_wave_form(CFG, t, x1, xi)))
    assert worst <= 1e-10


def test_compton_speed():
    two_theta, compton = compton_speed([100.0, 0, 0])
    assert abs(two_theta - (1 - 100 / np.sqrt(1 + 100**2))) <= 1e-15
    assert compton == 0.0
    two_theta, compton = compton_speed([0.0, 50.0, 0.0])
    assert two_theta == 1.0 and compton == 1.0
    two_theta, compton = compton_speed([-1e8, 0, 0])
    assert abs(two_theta - 2.0) <= 1e-6 and compton == 2.0
    with pytest.raises(ZeroMomentum):
        compton_speed([0.0, 0.0, 0.0])


def test_fourier_adjoint_involution(rng):
    fs = d1_fourier_symbol(CFG, 1.7)
    dd = fourier_adjoint(fourier_adjoint(fs))
    for _ in range(5):
        xi = rng.normal(size=3) * 2
        x1 = rng.uniform(-3, 3)
        assert matnorm(dd.evaluate(x1, xi) - fs.evaluate(x1, xi)) <= 1e-13


def test_fourier_symmetrize_fixed_point(rng):
    fs = d1_fourier_symbol(CFG, 1.7)
    sym = symmetrize(fs)
    adj = fourier_adjoint(sym)
    for _ in range(5):
        xi = rng.normal(size=3) * 2
        x1 = rng.uniform(-3, 3)
        assert matnorm(adj.evaluate(x1, xi) - sym.evaluate(x1, xi)) <= 1e-12


def test_fourier_static_selfadjoint_unchanged():
    mat = np.diag([1.0, 2.0, -1.0, 0.5]).astype(complex)
    fs = FourierSymbol({0: lambda xi: mat}, omega=1.0)
    adj = fourier_adjoint(fs)
    sym = symmetrize(fs)
    xi = np.array([0.3, -0.8, 1.2])
    assert matnorm(adj.evaluate(0.4, xi) - mat) == 0.0
    assert matnorm(sym.evaluate(0.4, xi) - mat) == 0.0


def test_d1_symbol_selfadjoint_mod_one_order():
    # the operator symmetrization defect of (the transported D_1) decays like
    # <xi>^{-1}: weighted defect stays bounded on a two-decade grid
    fs = d1_fourier_symbol(CFG, 1.7)
    sym = symmetrize(fs)
    d = np.array([0.6, 0.64, 0.48])
    d /= np.linalg.norm(d)
    rs = np.logspace(np.log10(5), np.log10(500), 9)
    weighted = []
    for r in rs:
        xi = r * d
        defect = matnorm(sym.evaluate(0.7, xi) - fs.evaluate(0.7, xi))
        weighted.append(np.sqrt(1 + r * r) * defect)
    assert fit_loglog_slope(np.sqrt(1 + rs**2), weighted) <= 0.05


def test_momentum_ladder_single_photon():
    fs = d1_fourier_symbol(CFG, 2.1)
    shifts = [s for s, _ in momentum_representation(fs)]
    assert shifts == [-CFG.omega, 0.0, CFG.omega]
    cfg0 = PlaneWaveConfig(0.0, 1.0)
    fs0 = d1_fourier_symbol(cfg0, 2.1)
    assert [s for s, _ in momentum_representation(fs0)] == [0.0]


def test_momentum_ladder_two_rounds():
    fs = two_round_fourier_symbol(lambda k: p_free(+1, k), CFG, 1.4)
    shifts = [s for s, _ in momentum_representation(fs)]
    allowed = {-2 * CFG.omega, -CFG.omega, 0.0, CFG.omega, 2 * CFG.omega}
    assert set(shifts) <= allowed
    # the second round genuinely widens the ladder to two-photon transfers
    assert 2 * CFG.omega in set(shifts)


def test_ode_residual_commuting_sector_decay():
    d = np.array([0.6, 0.64, 0.48])
    d /= np.linalg.norm(d)
    rs = np.logspace(np.log10(5), np.log10(200), 8)
    t = 1.3
    x1 = 0.37 * 2 * np.pi / CFG.omega
    weighted = []
    for r in rs:
        xi = r * d
        res = ode_residual_commuting(CFG, t, x1, xi)
        weighted.append(np.sqrt(1 + r * r) * res)
    assert fit_loglog_slope(np.sqrt(1 + rs**2), weighted) <= 0.05

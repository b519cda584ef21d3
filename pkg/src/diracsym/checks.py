"""Scenario verification suites shared by the CLI and the acceptance tests.

Each suite runs a fixed set of identity/oracle checks at configured
tolerances and returns (results, artifacts); all randomness flows from the
configured seed through a counter-based generator, so reruns are
byte-identical.
"""

from __future__ import annotations

import numpy as np
from scipy.integrate import quad

from . import dirac, flow, planewave, spectral, spin
from .config import RunConfig
from .fields import PotentialModel, SmoothedCoulomb, UniformB, ZeroField
from .matrices import (
    I4, RADIATION, STANDARD, clifford_residual, dagger, gw_compose,
    gw_decompose, make_dirac_set, matnorm, pauli_dot, selfadjoint_residual,
)
from .quadrature import fit_loglog_slope
from .report import Artifact, CheckResult


def rng_for(cfg: RunConfig, stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=cfg.seed + stream))


def _models(cfg: RunConfig):
    return (SmoothedCoulomb(c_f=cfg.coulomb_cf, r0=cfg.coulomb_r0),
            UniformB(list(cfg.uniform_b)))


class _CoulombPlusB(PotentialModel):
    """Superposition with both E and B fields for the consistency checks."""

    name = "coulomb-plus-b"
    test_only = True

    def __init__(self, cfg: RunConfig):
        self.c = SmoothedCoulomb(c_f=cfg.coulomb_cf, r0=cfg.coulomb_r0)
        self.u = UniformB(list(cfg.uniform_b))

    def V(self, t, x):
        return self.c.V(t, x)

    def grad_V(self, t, x):
        return self.c.grad_V(t, x)

    def A(self, t, x):
        return self.u.A(t, x)

    def jac_A(self, t, x):
        return self.u.jac_A(t, x)


# ---------------------------------------------------------------- algebra


def algebra_suite(cfg: RunConfig):
    gen = rng_for(cfg, 1)
    coulomb, _ = _models(cfg)
    results = []

    res = max(clifford_residual(make_dirac_set(v)) for v in (STANDARD, RADIATION))
    results.append(CheckResult("clifford-relations", res,
                               cfg.tolerance("clifford-relations")))
    res = max(selfadjoint_residual(make_dirac_set(v)) for v in (STANDARD, RADIATION))
    results.append(CheckResult("self-adjointness", res,
                               cfg.tolerance("self-adjointness")))

    sandwich = proj = unit = diag = pauli = gw = restrict = 0.0
    std = make_dirac_set(STANDARD)
    for _ in range(100):
        x = gen.normal(size=3) * 2
        xi = gen.normal(size=3) * 2
        h = dirac.symbol_h(std, coulomb, 0.0, x, xi)
        lp, lm = dirac.eigen_lambda(coulomb, 0.0, x, xi)
        pp = dirac.projection_p(+1, coulomb, 0.0, x, xi)
        pm = dirac.projection_p(-1, coulomb, 0.0, x, xi)
        proj = max(proj,
                   matnorm(pp @ pp - pp), matnorm(pp @ pm),
                   matnorm(pp + pm - I4), matnorm(lp * pp + lm * pm - h))

        # eigenspace sandwich identities at vanishing potentials
        az = dirac.bracket_norm(xi)
        h0 = std.beta + sum(std.alpha[j] * xi[j] for j in range(3))
        pf = 0.5 * (I4 + h0 / az)
        for j in range(3):
            sandwich = max(sandwich,
                           matnorm(pf @ std.alpha[j] @ pf - (xi[j] / az) * pf))
        sandwich = max(sandwich, matnorm(pf @ std.beta @ pf - (1.0 / az) * pf))

        ups = dirac.diagonalizer_upsilon(coulomb, 0.0, x, xi)
        unit = max(unit, matnorm(dagger(ups) @ ups - I4))
        v = coulomb.V(0.0, x)
        azc = dirac.bracket_norm(dirac.zeta(coulomb, 0.0, x, xi))
        diag = max(diag, matnorm(dagger(ups) @ h @ ups - (v * I4 + azc * std.beta)))

        a3 = gen.normal(size=3)
        b3 = gen.normal(size=3)
        lhs = pauli_dot(a3) @ pauli_dot(b3)
        rhs = (a3 @ b3) * np.eye(2) + 1j * pauli_dot(np.cross(a3, b3))
        pauli = max(pauli, matnorm(lhs - rhs))

        m2 = gen.normal(size=(2, 2)) + 1j * gen.normal(size=(2, 2))
        m2 = m2 + dagger(m2)
        gw = max(gw, matnorm(gw_compose(gw_decompose(m2)) - m2))

        q = gen.normal(size=(4, 4)) + 1j * gen.normal(size=(4, 4))
        k2 = dirac.restrict_to_eigenspace(q, +1, coulomb, 0.0, x, xi)
        back = dirac.reconstruct_from_eigenspace(k2, +1, coulomb, 0.0, x, xi)
        restrict = max(restrict, matnorm(back - pp @ q @ pp))

    results += [
        CheckResult("eigenspace-sandwich", sandwich, cfg.tolerance("eigenspace-sandwich")),
        CheckResult("projection-algebra", proj, cfg.tolerance("projection-algebra")),
        CheckResult("upsilon-unitary", unit, cfg.tolerance("upsilon-unitary")),
        CheckResult("upsilon-diagonalizes", diag, cfg.tolerance("upsilon-diagonalizes")),
        CheckResult("pauli-cross-identity", pauli, cfg.tolerance("pauli-cross-identity")),
        CheckResult("gw-roundtrip", gw, cfg.tolerance("gw-roundtrip")),
        CheckResult("restriction-roundtrip", restrict, cfg.tolerance("restriction-roundtrip")),
    ]
    return results, []


# ------------------------------------------------------------------- flow


def flow_suite(cfg: RunConfig):
    gen = rng_for(cfg, 2)
    coulomb, _ = _models(cfg)
    zero = ZeroField()
    results = []

    p0 = flow.PhasePoint.of([0.5, -1.0, 2.0], [0.3, 0.8, -0.2])
    traj = flow.integrate_flow(+1, zero, p0, 7.0)
    vel = p0.xi / dirac.bracket_norm(p0.xi)
    res = max(float(np.max(np.abs(traj.endpoint.x - (p0.x + 7.0 * vel)))),
              float(np.max(np.abs(traj.endpoint.xi - p0.xi))))
    results.append(CheckResult("free-flow-exact", res, cfg.tolerance("free-flow-exact")))

    p0 = flow.PhasePoint.of([2.0, 0, 0], [0, 0.3, 0])
    ts = np.linspace(0.0, cfg.flow_time, 2001)
    traj = flow.integrate_flow(+1, coulomb, p0, cfg.flow_time, sample_times=ts)
    lams = traj.lambdas()
    results.append(CheckResult("energy-conservation",
                               float(np.max(np.abs(lams - lams[0]))),
                               cfg.tolerance("energy-conservation")))
    results.append(CheckResult("lorentz-residual",
                               flow.lorentz_residual(+1, coulomb, traj),
                               cfg.tolerance("lorentz-residual")))

    inv = 0.0
    for _ in range(4):
        q0 = flow.PhasePoint.of(gen.normal(size=3) * 2, gen.normal(size=3))
        fwd = flow.integrate_flow(+1, coulomb, q0, 5.0)
        back = flow.integrate_flow(+1, coulomb, fwd.endpoint, -5.0)
        inv = max(inv, float(np.max(np.abs(back.endpoint.as_vector() - q0.as_vector()))))
    results.append(CheckResult("flow-inversion", inv, cfg.tolerance("flow-inversion")))

    rows = [(t, x[0], x[1], x[2], k[0], k[1], k[2], lam)
            for t, x, k, lam in zip(traj.ts, traj.xs, traj.xis, lams)]
    art = Artifact("trajectory_coulomb",
                   ["t", "x1", "x2", "x3", "xi1", "xi2", "xi3", "lambda"],
                   rows, kind="trajectory")
    return results, [art]


# ------------------------------------------------------------------- spin


def spin_suite(cfg: RunConfig):
    gen = rng_for(cfg, 3)
    coulomb, uniform = _models(cfg)
    results = []

    worst = 0.0
    for model in (coulomb, uniform):
        for _ in range(25):
            p = flow.PhasePoint.of(gen.normal(size=3) * 2, gen.normal(size=3) * 2)
            th = spin.theta_numeric(+1, model, 0.0, p)
            worst = max(worst, matnorm(spin.traceless(th)
                                       - spin.theta_closed_form(model, 0.0, p)))
    results.append(CheckResult("theta-vs-closed-form", worst,
                               cfg.tolerance("theta-vs-closed-form")))

    k0 = spin.KappaState(vec=np.array([0.6, 0.0, 0.8]))
    p0 = flow.PhasePoint.of([2.0, 0, 0], [0, 0.3, 0])
    out = spin.integrate_kappa(+1, coulomb, p0, k0, cfg.kappa_time, tol=1e-10)
    results.append(CheckResult("kappa-norm-conservation",
                               abs(float(np.linalg.norm(out.vec)) - 1.0),
                               cfg.tolerance("kappa-norm-conservation")))

    b = 0.8
    f_frozen = spin.field_F_from([0, 0, 0], [0, 0, 0], [0, 0, b])
    kv0 = np.array([1.0, 0.0, 0.5])
    kt = spin.precess_frozen(f_frozen, kv0, 2 * np.pi / b, tol=1e-12)
    results.append(CheckResult("kappa-rotation-period",
                               float(np.max(np.abs(kt - kv0))),
                               cfg.tolerance("kappa-rotation-period")))

    both = _CoulombPlusB(cfg)
    worst = 0.0
    for model in (coulomb, both):
        for sign in (+1, -1):
            for _ in range(10):
                p = flow.PhasePoint.of(gen.normal(size=3) * 2, gen.normal(size=3) * 2)
                worst = max(worst, spin.kappa_rhs_consistency(
                    sign, model, 0.0, p, rng=rng_for(cfg, 30)))
    results.append(CheckResult("kappa-rhs-consistency", worst,
                               cfg.tolerance("kappa-rhs-consistency")))

    rest = max(matnorm(spin.spin_kappa_matrix(j, [0, 0, 0]) - 0.5 * pauli_dot(np.eye(3)[j - 1]))
               for j in (1, 2, 3))
    results.append(CheckResult("spin-rest-vectors", rest, cfg.tolerance("spin-rest-vectors")))

    par = max(abs(spin.spin_kappa_vector(1, [s, 0, 0])[0] - 0.5)
              for s in (0.1, 0.5, 0.9, 0.999))
    results.append(CheckResult("spin-parallel-component", par,
                               cfg.tolerance("spin-parallel-component")))

    worst = 0.0
    for _ in range(20):
        x = gen.normal(size=3) * 2
        xi = gen.normal(size=3) * 2
        v = flow.velocity_from_zeta(dirac.zeta(coulomb, 0.0, x, xi))
        for j in (1, 2, 3):
            s = spin.spin_corrected_symbol(coulomb, 0.0, x, xi, j)
            for sign in (+1, -1):
                k2 = dirac.restrict_to_eigenspace(s, sign, coulomb, 0.0, x, xi)
                worst = max(worst, matnorm(k2 - spin.spin_kappa_matrix(j, v)))
    results.append(CheckResult("spin-restriction-oracle", worst,
                               cfg.tolerance("spin-restriction-oracle")))

    # kappa precession trace on the Coulomb orbit
    ts = np.linspace(0.0, cfg.kappa_time, 401)
    tk, yk = spin.integrate_kappa(+1, coulomb, p0, k0, cfg.kappa_time,
                                  tol=1e-10, sample_times=ts)
    rows = [(t, y[0], y[1], y[2], y[3], y[4], y[5],
             y[6], y[7], y[8], float(np.linalg.norm(y[6:9])))
            for t, y in zip(tk, yk)]
    art_kappa = Artifact("kappa_trace",
                         ["t", "x1", "x2", "x3", "xi1", "xi2", "xi3",
                          "k1", "k2", "k3", "knorm"],
                         rows, kind="kappa")

    # relativistic shortening of the spin vectors against speed
    rows = []
    for s in np.linspace(0.0, 0.99, 34):
        v = np.array([s, 0.0, 0.0])
        k1 = spin.spin_kappa_vector(1, v)
        k2v = spin.spin_kappa_vector(2, v)
        rows.append((s, k1[0], k2v[1]))
    art_short = Artifact("spin_shortening", ["speed", "parallel", "perpendicular"],
                         rows, kind="spin")
    return results, [art_kappa, art_short]


# -------------------------------------------------------------- planewave


def _gamma_quad(xi, t, omega):
    a = omega * (planewave.s_comp(1, xi) - 1.0)
    re = quad(lambda tau: np.cos(a * tau), 0.0, t, epsabs=1e-13, epsrel=1e-13)[0]
    im = quad(lambda tau: np.sin(a * tau), 0.0, t, epsabs=1e-13, epsrel=1e-13)[0]
    return re + 1j * im


def planewave_suite(cfg: RunConfig, part: str = "both"):
    gen = rng_for(cfg, 4)
    pw = planewave.PlaneWaveConfig(epsilon0=cfg.epsilon0, omega=cfg.omega)
    results = []

    worst = 0.0
    for _ in range(5):
        t = gen.uniform(0.2, 4.0)
        eps0 = gen.uniform(0.05, 0.5)
        omega = gen.uniform(0.5, 2.0)
        c = planewave.PlaneWaveConfig(epsilon0=eps0, omega=omega)
        worst = max(worst, planewave.translation_conjugation_residual(
            c, t, 256, rng=rng_for(cfg, 40)))
    results.append(CheckResult("translation-conjugation", worst,
                               cfg.tolerance("translation-conjugation")))

    worst = 0.0
    dirs = gen.normal(size=(10, 3))
    for d in dirs:
        xi = d * gen.uniform(0.5, 4.0)
        for t in np.linspace(0.4, 6.0, 10):
            for omega in np.linspace(0.4, 2.0, 5):
                worst = max(worst, abs(planewave.gamma_t(xi, t, omega)
                                       - _gamma_quad(xi, t, omega)))
    results.append(CheckResult("gamma-closed-vs-quadrature", worst,
                               cfg.tolerance("gamma-closed-vs-quadrature")))

    worst = 0.0
    n = 0
    while n < 40:
        xi = gen.normal(size=3) * 3
        if planewave.theta_of(xi) < 0.05:
            continue
        n += 1
        t = gen.uniform(0, 6)
        x1 = gen.uniform(-3, 3)
        worst = max(worst, abs(planewave.electron_shift_coefficient(pw, t, x1, xi)
                               - planewave.collision_wave_form(pw, t, x1, xi)))
    results.append(CheckResult("collision-identity", worst,
                               cfg.tolerance("collision-identity")))

    worst = 0.0
    for _ in range(6):
        xi = gen.normal(size=3) * 2
        t = gen.uniform(0.2, 4.0)
        x1 = gen.uniform(-3, 3)
        for j in (2, 3):
            zp, zm = planewave.second_correction_z_plusminus(
                lambda k, jj=j: k[jj - 1] * I4, pw, t, x1, xi)
            worst = max(worst, matnorm(zp), matnorm(zm))
    results.append(CheckResult("transverse-momentum-static", worst,
                               cfg.tolerance("transverse-momentum-static")))

    worst = 0.0
    init = 0.0
    for _ in range(10):
        xi = gen.normal(size=3) * 2
        t = gen.uniform(0, 6)
        x1 = gen.uniform(-3, 3)
        a = planewave.d1_heisenberg_symbol(pw, t, x1, xi)
        worst = max(worst, matnorm(a - dagger(a)))
        init = max(init, matnorm(planewave.d1_heisenberg_symbol(pw, 0.0, x1, xi)
                                 - xi[0] * I4))
    results.append(CheckResult("momentum-symbol-selfadjoint", worst,
                               cfg.tolerance("momentum-symbol-selfadjoint")))
    results.append(CheckResult("momentum-symbol-initial", init,
                               cfg.tolerance("momentum-symbol-initial")))

    d = np.array([0.6, 0.64, 0.48])
    d /= np.linalg.norm(d)
    rs = np.logspace(np.log10(5.0), np.log10(200.0), 8)
    weighted = []
    for r in rs:
        res = planewave.ode_residual_commuting(pw, 1.3, 0.37 * 2 * np.pi / cfg.omega, r * d)
        weighted.append(np.sqrt(1 + r * r) * res)
    slope = fit_loglog_slope(np.sqrt(1 + rs**2), weighted)
    results.append(CheckResult("transport-residual-slope", slope,
                               cfg.tolerance("transport-residual-slope")))

    fs = planewave.d1_fourier_symbol(pw, 2.1)
    shifts = [s for s, _ in planewave.momentum_representation(fs)]
    ok = shifts == [-cfg.omega, 0.0, cfg.omega]
    results.append(CheckResult("photon-ladder-one-round", 0.0 if ok else 1.0,
                               cfg.tolerance("photon-ladder-one-round")))
    fs2 = planewave.two_round_fourier_symbol(lambda k: planewave.p_free(+1, k), pw, 1.4)
    shifts2 = {s for s, _ in planewave.momentum_representation(fs2)}
    allowed = {n * cfg.omega for n in range(-2, 3)}
    ok = shifts2 <= allowed and 2 * cfg.omega in shifts2
    results.append(CheckResult("photon-ladder-two-rounds", 0.0 if ok else 1.0,
                               cfg.tolerance("photon-ladder-two-rounds")))

    # shift-symbol surface over (t, xi1): electron/positron scalar coefficients
    rows = []
    want_e = part in ("electron", "both")
    want_p = part in ("positron", "both")
    x1 = 0.0
    for t in np.linspace(0.0, 8.0, cfg.shift_grid_times):
        for xi1 in np.linspace(-6.0, 6.0, cfg.shift_grid_xi):
            xi = np.array([xi1, 1.5, 0.0])
            row = [t, x1, xi1, xi[1], xi[2]]
            if want_e:
                row.append(planewave.electron_shift_coefficient(pw, t, x1, xi))
            if want_p:
                th_m = planewave.theta_of(-xi)
                amp = cfg.epsilon0 * cfg.omega * t * planewave.s_comp(2, xi)
                row.append(-amp * np.cos(cfg.omega * (x1 - t * th_m))
                           * np.real(planewave._sinc(cfg.omega * th_m * t)))
            rows.append(tuple(row))
    header = ["t", "x1", "xi1", "xi2", "xi3"]
    if want_e:
        header.append("electron_shift")
    if want_p:
        header.append("positron_shift")
    art_shift = Artifact("shift_symbol_grid", header, rows, kind="shift")

    # Compton direction curve at |xi| = 1000
    rows = []
    for lam_ang in np.linspace(0.01, np.pi, 60):
        xi = 1000.0 * np.array([np.cos(lam_ang), np.sin(lam_ang), 0.0])
        two_theta, compton = planewave.compton_speed(xi)
        rows.append((lam_ang, two_theta, compton))
    art_compton = Artifact("compton_curve", ["angle", "two_theta", "one_minus_cos"],
                           rows, kind="compton")
    return results, [art_shift, art_compton]


# --------------------------------------------------------------- spectral


def spectral_suite(cfg: RunConfig):
    gen = rng_for(cfg, 5)
    pw = planewave.PlaneWaveConfig(epsilon0=max(cfg.epsilon0, 0.2), omega=cfg.omega)
    params = spectral.TransverseParams(xi2=0.4, xi3=-0.3, cfg=pw)
    results = []

    worst = 0.0
    for _ in range(25):
        pr = spectral.TransverseParams(xi2=gen.normal() * 3, xi3=gen.normal() * 3, cfg=pw)
        x1 = gen.uniform(-5, 5)
        p2, q2 = spectral.p_q_matrices(pr, x1)
        worst = max(worst, matnorm(p2 @ q2 - spectral.p_bracket2(pr, x1) * np.eye(2)))
    results.append(CheckResult("pq-scalar", worst, cfg.tolerance("pq-scalar")))

    worst = 0.0
    h = 1e-3
    for _ in range(50):
        lam = gen.choice([-1, 1]) * gen.uniform(0.1, 5.0)
        pr = spectral.TransverseParams(xi2=gen.normal(), xi3=gen.normal(), cfg=pw)
        c2 = gen.normal(size=2) + 1j * gen.normal(size=2)
        x1 = gen.uniform(-4, 4)
        psi = lambda y: spectral.eigenfunction(pr, lam, c2, y)
        val = psi(x1)
        du = (psi(x1 - 2 * h)[0:2] - 8 * psi(x1 - h)[0:2]
              + 8 * psi(x1 + h)[0:2] - psi(x1 + 2 * h)[0:2]) / (12 * h)
        p2, q2 = spectral.p_q_matrices(pr, x1)
        worst = max(worst,
                    float(np.max(np.abs(-2 * du - 1j * lam * val[0:2] - p2 @ val[2:4]))),
                    float(np.max(np.abs(q2 @ val[0:2] - 1j * lam * val[2:4]))))
    results.append(CheckResult("eigenfunction-residual", worst,
                               cfg.tolerance("eigenfunction-residual")))

    worst = 0.0
    for _ in range(10):
        x1 = gen.uniform(-4, 4)
        y1 = x1 + gen.uniform(0.1, 3.0) * gen.choice([-1, 1])
        c, d_avg, a2 = spectral.cd_functions(params, x1, y1)
        c_q = quad(lambda tau: spectral.a2_pot(params, tau), y1, x1,
                   epsabs=1e-13, epsrel=1e-13)[0] / (x1 - y1)
        d_q = quad(lambda tau: spectral.a2_pot(params, tau) ** 2, y1, x1,
                   epsabs=1e-13, epsrel=1e-13)[0] / (x1 - y1)
        worst = max(worst, abs(c - c_q), abs(d_avg - d_q))
    results.append(CheckResult("cd-closed-vs-quadrature", worst,
                               cfg.tolerance("cd-closed-vs-quadrature")))

    worst = 0.0
    coin = 0.0
    for _ in range(15):
        x1 = gen.uniform(-4, 4)
        y1 = x1 + gen.uniform(-3, 3)
        xi1 = gen.normal() * 3
        bp = spectral.proj_block_symbols(+1, params, x1, y1, xi1)
        bm = spectral.proj_block_symbols(-1, params, x1, y1, xi1)
        c, _, a2 = spectral.cd_functions(params, x1, y1)
        denom = (params.xi2 - c) ** 2 + params.xi3**2 + a2
        p_y = spectral.p_q_matrices(params, y1)[0]
        q_x = spectral.p_q_matrices(params, x1)[1]
        worst = max(worst,
                    matnorm(bp.p11 + bm.p11 - np.eye(2)),
                    matnorm(bp.p12 + bm.p12),
                    matnorm(bp.p21 + bm.p21),
                    matnorm(bp.p22 + bm.p22 - (q_x @ p_y) / denom))
        bpc = spectral.proj_block_symbols(+1, params, x1, x1, xi1)
        bmc = spectral.proj_block_symbols(-1, params, x1, x1, xi1)
        coin = max(coin, matnorm(bpc.p22 + bmc.p22 - np.eye(2)))
    results.append(CheckResult("block-sum-identities", worst,
                               cfg.tolerance("block-sum-identities")))
    results.append(CheckResult("coincidence-diagonal", coin,
                               cfg.tolerance("coincidence-diagonal")))

    worst = 0.0
    g_plus = spectral.gaussian_profile(3.0, 0.35)
    g_minus = spectral.gaussian_profile(-3.0, 0.35)
    for x1, tau in [(0.9, 0.2), (1.7, -0.6), (-0.4, 1.1)]:
        worst = max(worst,
                    spectral.substitution_consistency(params, x1, tau, g_plus, +1),
                    spectral.substitution_consistency(params, x1, tau, g_minus, -1))
    results.append(CheckResult("substitution-consistency", worst,
                               cfg.tolerance("substitution-consistency")))

    radii = np.logspace(np.log10(cfg.xi_decay_min), np.log10(cfg.xi_decay_max),
                        cfg.xi_decay_points)
    weighted = spectral.proj_vs_free_residual(+1, pw, radii, rng_for(cfg, 50))
    slope = fit_loglog_slope(np.sqrt(1 + radii**2), weighted)
    results.append(CheckResult("projection-decay-slope", slope,
                               cfg.tolerance("projection-decay-slope")))

    rows = [(r, float(np.sqrt(1 + r * r)), w) for r, w in zip(radii, weighted)]
    art = Artifact("projection_decay", ["radius", "bracket", "weighted_residual"],
                   rows, kind="decay")

    # block-symbol entries of the electron projection on a (xi1, y1) grid
    rows = []
    x1 = 0.6
    for xi1 in np.linspace(-4.0, 4.0, 17):
        for y1 in np.linspace(x1 - 3.0, x1 + 3.0, 13):
            b = spectral.proj_block_symbols(+1, params, x1, y1, xi1)
            rows.append((x1, y1, xi1,
                         b.p11[0, 0].real,
                         b.p12[0, 0].real, b.p12[0, 0].imag,
                         b.p21[0, 0].real, b.p21[0, 0].imag,
                         b.p22[0, 0].real, b.p22[0, 0].imag))
    art_blocks = Artifact(
        "projection_blocks",
        ["x1", "y1", "xi1", "p11", "re_p12", "im_p12",
         "re_p21", "im_p21", "re_p22", "im_p22"],
        rows, kind="table")
    return results, [art, art_blocks]


SUITES = {
    "algebra": algebra_suite,
    "flow": flow_suite,
    "spin": spin_suite,
    "planewave": planewave_suite,
    "spectral": spectral_suite,
}


def run_scenario(name: str, cfg: RunConfig, part: str = "both"):
    """Run one named suite (or all of them for ``verify-all``)."""
    if name == "verify-all":
        results, artifacts = [], []
        for key in ("algebra", "flow", "spin", "planewave", "spectral"):
            r, a = run_scenario(key, cfg, part=part)
            results += r
            artifacts += a
        return results, artifacts
    if name not in SUITES:
        raise ValueError(f"unknown scenario {name!r}")
    if name == "planewave":
        return planewave_suite(cfg, part=part)
    return SUITES[name](cfg)

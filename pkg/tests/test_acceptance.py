"""Acceptance gate: one test per criterion, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass/fail line
per criterion.  Runtime limits refer to a laptop-class machine.
"""

import time


from diracsym.checks import run_scenario
from diracsym.cli import main
from diracsym.config import RunConfig

CFG = RunConfig(seed=20240901, epsilon0=0.2, omega=1.0).validate()

_CACHE = {}


def suite(name):
    if name not in _CACHE:
        t0 = time.perf_counter()
        results, artifacts = run_scenario(name, CFG)
        _CACHE[name] = (results, artifacts, time.perf_counter() - t0)
    return _CACHE[name]


def by_name(results, name):
    for r in results:
        if r.name == name:
            return r
    raise KeyError(name)


def report(num, label, ok, detail):
    print(f"ACCEPTANCE {num:2d} [{'PASS' if ok else 'FAIL'}] {label}: {detail}")
    assert ok, f"criterion {num} ({label}): {detail}"


def test_criterion_01_dirac_algebra():
    results, _, elapsed = suite("algebra")
    worst = max(r.value for r in results)
    ok = all(r.passed for r in results) and worst <= 1e-11 and elapsed < 1.0
    report(1, "Dirac algebra suite",
           ok, f"max residual {worst:.3e} <= 1e-11, runtime {elapsed:.2f}s < 1s")


def test_criterion_02_classical_flow():
    results, _, elapsed = suite("flow")
    checks = {
        "free-flow-exact": 1e-10,
        "energy-conservation": 1e-8,
        "lorentz-residual": 1e-5,
        "flow-inversion": 1e-7,
    }
    ok = elapsed < 10.0
    parts = [f"runtime {elapsed:.2f}s < 10s"]
    for name, bound in checks.items():
        r = by_name(results, name)
        ok = ok and r.value <= bound
        parts.append(f"{name} {r.value:.3e} <= {bound:.0e}")
    report(2, "classical-flow suite", ok, "; ".join(parts))


def test_criterion_03_theta_oracle():
    results, _, elapsed = suite("spin")
    r = by_name(results, "theta-vs-closed-form")
    ok = r.value <= 1e-5 and elapsed < 30.0
    report(3, "numeric Theta vs closed-form field (50 seeded points)",
           ok, f"max deviation {r.value:.3e} <= 1e-5, runtime {elapsed:.2f}s < 30s")


def test_criterion_04_kappa_transport():
    results, _, _ = suite("spin")
    names = {
        "kappa-norm-conservation": 1e-7,
        "kappa-rotation-period": 1e-7,
        "kappa-rhs-consistency": 1e-9,
    }
    ok = True
    parts = []
    for name, bound in names.items():
        r = by_name(results, name)
        ok = ok and r.value <= bound
        parts.append(f"{name} {r.value:.3e} <= {bound:.0e}")
    report(4, "kappa transport", ok, "; ".join(parts))


def test_criterion_05_spin_vectors():
    results, _, _ = suite("spin")
    rest = by_name(results, "spin-rest-vectors")
    par = by_name(results, "spin-parallel-component")
    oracle = by_name(results, "spin-restriction-oracle")
    ok = rest.value == 0.0 and par.value <= 1e-14 and oracle.value <= 1e-10
    report(5, "spin kappa-vectors", ok,
           f"rest exact ({rest.value:.1e}), parallel {par.value:.3e},"
           f" restriction oracle {oracle.value:.3e} <= 1e-10")


def test_criterion_06_propagator_factorization():
    results, _, _ = suite("planewave")
    r = by_name(results, "translation-conjugation")
    ok = r.value <= 1e-10
    report(6, "plane-wave propagator factorization (5 triples, 256-pt grid)",
           ok, f"max residual {r.value:.3e} <= 1e-10")


def test_criterion_07_gamma_and_collision():
    results, _, _ = suite("planewave")
    g = by_name(results, "gamma-closed-vs-quadrature")
    c = by_name(results, "collision-identity")
    ok = g.value <= 1e-9 and c.value <= 1e-10
    report(7, "gamma envelope and collision identity", ok,
           f"gamma closed vs quadrature {g.value:.3e} <= 1e-9;"
           f" collision {c.value:.3e} <= 1e-10")


def test_criterion_08_momentum_symbol():
    results, _, _ = suite("planewave")
    static = by_name(results, "transverse-momentum-static")
    sa = by_name(results, "momentum-symbol-selfadjoint")
    init = by_name(results, "momentum-symbol-initial")
    slope = by_name(results, "transport-residual-slope")
    ok = (static.value <= 1e-10 and sa.value <= 1e-12
          and init.value == 0.0 and slope.value <= 0.05)
    report(8, "transverse invariance and D1 symbol", ok,
           f"D2/D3 corrections {static.value:.3e} <= 1e-10;"
           f" self-adjoint {sa.value:.3e} <= 1e-12; t=0 exact ({init.value:.1e});"
           f" weighted residual slope {slope.value:.3f} <= 0.05")


def test_criterion_09_photon_ladder():
    results, _, _ = suite("planewave")
    one = by_name(results, "photon-ladder-one-round")
    two = by_name(results, "photon-ladder-two-rounds")
    ok = one.value == 0.0 and two.value == 0.0
    report(9, "momentum-transfer ladder", ok,
           "one round gives exactly {-w, 0, +w}; two rounds stay within"
           " {-2w..+2w}" if ok else "ladder sets wrong")


def test_criterion_10_spectral_suite():
    results, _, elapsed = suite("spectral")
    names = {
        "pq-scalar": 1e-13,
        "eigenfunction-residual": 1e-6,
        "cd-closed-vs-quadrature": 1e-10,
        "block-sum-identities": 1e-12,
        "coincidence-diagonal": 1e-12,
        "substitution-consistency": 1e-6,
        "projection-decay-slope": 0.05,
    }
    ok = elapsed < 60.0
    parts = [f"runtime {elapsed:.2f}s < 60s"]
    for name, bound in names.items():
        r = by_name(results, name)
        ok = ok and r.value <= bound
        parts.append(f"{name} {r.value:.3e}")
    report(10, "spectral suite", ok, "; ".join(parts))


def test_criterion_11_verify_all_deterministic(tmp_path):
    t0 = time.perf_counter()
    code1 = main(["verify-all", "--out", str(tmp_path / "a"), "--no-figures"])
    code2 = main(["verify-all", "--out", str(tmp_path / "b"), "--no-figures"])
    elapsed = time.perf_counter() - t0
    identical = True
    for f in sorted((tmp_path / "a").glob("*.csv")):
        other = tmp_path / "b" / f.name
        if f.read_bytes() != other.read_bytes():
            identical = False
    ok = code1 == 0 and code2 == 0 and identical and elapsed < 180.0
    report(11, "verify-all determinism", ok,
           f"exit codes ({code1}, {code2}), CSV byte-identical: {identical},"
           f" two runs in {elapsed:.1f}s < 180s")

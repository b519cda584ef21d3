"""Classical electron/positron phase-space flows of the Dirac symbol.

The Hamiltonians are lambda_+- (x, xi) = V(x) +- <xi - A(x)>; their flows
nu_t^+- transport symbols and reproduce the relativistic Lorentz-force law.
Integration uses an embedded Dormand-Prince 5(4) pair with PI step control
and the standard quartic dense-output interpolant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dirac import bracket_norm
from .errors import StepFailure, SuperluminalInput
from .fields import PotentialModel, field_B, field_E

DEFAULT_TOL = 1e-10

# Dormand-Prince 5(4) tableau (FSAL).
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = [
    np.array([]),
    np.array([1 / 5]),
    np.array([3 / 40, 9 / 40]),
    np.array([44 / 45, -56 / 15, 32 / 9]),
    np.array([19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729]),
    np.array([9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656]),
    np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84]),
]
_B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_E = _B5 - np.array(
    [5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40]
)
# Dense-output polynomial (y(t0 + th) = y0 + h * K^T P [th, th^2, th^3, th^4]).
_P = np.array(
    [
        [1, -8048581381 / 2820520608, 8663915743 / 2820520608, -12715105075 / 11282082432],
        [0, 0, 0, 0],
        [0, 131558114200 / 32700410799, -68118460800 / 10900136933, 87487479700 / 32700410799],
        [0, -1754552775 / 470086768, 14199869525 / 1410260304, -10690763975 / 1880347072],
        [0, 127303824393 / 49829197408, -318862633887 / 49829197408, 701980252875 / 199316789632],
        [0, -282668133 / 205662961, 2019193451 / 616988883, -1453857185 / 822651844],
        [0, 40617522 / 29380423, -110615467 / 29380423, 69997945 / 29380423],
    ]
)


@dataclass
class IntegratorStats:
    steps: int = 0
    rejected: int = 0
    max_error: float = 0.0


@dataclass
class OdeSolution:
    ts: np.ndarray
    ys: np.ndarray
    stats: IntegratorStats
    sampled_ts: np.ndarray | None = None
    sampled_ys: np.ndarray | None = None


def integrate_rk45(f, t0: float, y0, t1: float, rtol: float, atol: float,
                   sample_times=None, max_step: float = np.inf) -> OdeSolution:
    """Adaptive Dormand-Prince 5(4) integration from t0 to t1 (either direction).

    ``sample_times`` are evaluated from the dense interpolant of the step
    containing them; accepted-step states are always recorded.
    """
    y = np.asarray(y0, dtype=float).copy()
    n = y.size
    direction = 1.0 if t1 >= t0 else -1.0
    span = abs(t1 - t0)
    stats = IntegratorStats()
    ts = [t0]
    ys = [y.copy()]

    samples = None
    if sample_times is not None:
        samples = np.asarray(sample_times, dtype=float)
        order = np.argsort(direction * samples)
        samples = samples[order]
        sampled = np.empty((samples.size, n))
        sampled[:] = np.nan
        next_sample = 0
        for i in range(samples.size):  # samples at t0 need no step
            if samples[i] == t0:
                sampled[i] = y
                next_sample = i + 1

    if span == 0.0:
        sol = OdeSolution(np.array(ts), np.array(ys), stats)
        if samples is not None:
            sol.sampled_ts, sol.sampled_ys = samples, sampled
        return sol

    k = np.empty((7, n))
    k[0] = f(t0, y)
    sc = atol + rtol * np.abs(y)
    d0 = np.sqrt(np.mean((y / sc) ** 2))
    d1 = np.sqrt(np.mean((k[0] / sc) ** 2))
    h = min(span, max_step, 0.01 * d0 / d1 if d1 > 1e-10 else 1e-3)
    t = t0
    err_prev = 1.0
    hmin_base = 16 * np.finfo(float).eps

    while direction * (t1 - t) > 0:
        h = min(h, abs(t1 - t), max_step)
        hmin = hmin_base * max(abs(t), span)
        if h < hmin:
            raise StepFailure(t, h, where=y.copy())
        hs = direction * h
        for i in range(1, 7):
            k[i] = f(t + _C[i] * hs, y + hs * (_A[i] @ k[:i]))
        y_new = y + hs * (_B5 @ k)
        err_vec = hs * (_E @ k)
        sc = atol + rtol * np.maximum(np.abs(y), np.abs(y_new))
        err = np.sqrt(np.mean((err_vec / sc) ** 2))

        if err <= 1.0:
            t_new = t + hs
            if samples is not None:
                while (next_sample < samples.size
                       and direction * (samples[next_sample] - t_new) <= 1e-14 * max(1.0, abs(t_new))
                       and direction * (samples[next_sample] - t) > 0):
                    th = (samples[next_sample] - t) / hs
                    p = np.array([th, th**2, th**3, th**4])
                    sampled[next_sample] = y + hs * (k.T @ _P @ p)
                    next_sample += 1
            t, y = t_new, y_new
            ts.append(t)
            ys.append(y.copy())
            stats.steps += 1
            stats.max_error = max(stats.max_error, err)
            k[0] = k[6]  # FSAL
            fac = 0.9 * err ** -0.14 * err_prev ** 0.08 if err > 0 else 10.0
            h *= min(10.0, max(0.2, fac))
            err_prev = max(err, 1e-10)
        else:
            stats.rejected += 1
            h *= max(0.2, 0.9 * err ** -0.2)

    sol = OdeSolution(np.array(ts), np.array(ys), stats)
    if samples is not None:
        sol.sampled_ts, sol.sampled_ys = samples, sampled
    return sol


@dataclass(frozen=True)
class PhasePoint:
    """A point (x, xi) of the 6-dimensional phase space."""

    x: np.ndarray
    xi: np.ndarray

    @staticmethod
    def of(x, xi) -> "PhasePoint":
        return PhasePoint(np.asarray(x, dtype=float), np.asarray(xi, dtype=float))

    def as_vector(self) -> np.ndarray:
        return np.concatenate([self.x, self.xi])


def hamilton_rhs(sign: int, model: PotentialModel, t: float,
                 p: PhasePoint) -> tuple[np.ndarray, np.ndarray]:
    """Right side of the Hamiltonian system for lambda_sign.

    dx = sign (xi - A)/<xi - A> (always subluminal), dxi = -d lambda_sign/dx.
    """
    s = 1.0 if sign > 0 else -1.0
    z = p.xi - model.A(t, p.x)
    az = bracket_norm(z)
    dx = s * z / az
    dxi = -model.grad_V(t, p.x) + s * (model.jac_A(t, p.x).T @ z) / az
    return dx, dxi


@dataclass
class Trajectory:
    """A time-sampled orbit of the sign-branch flow."""

    sign: int
    model: PotentialModel
    ts: np.ndarray
    xs: np.ndarray   # (N, 3)
    xis: np.ndarray  # (N, 3)
    stats: IntegratorStats = field(default_factory=IntegratorStats)

    @property
    def samples(self) -> list[tuple[float, PhasePoint]]:
        return [(float(t), PhasePoint.of(x, xi))
                for t, x, xi in zip(self.ts, self.xs, self.xis)]

    @property
    def endpoint(self) -> PhasePoint:
        return PhasePoint.of(self.xs[-1], self.xis[-1])

    def lambdas(self) -> np.ndarray:
        s = 1.0 if self.sign > 0 else -1.0
        out = np.empty(len(self.ts))
        for i, (t, x, xi) in enumerate(zip(self.ts, self.xs, self.xis)):
            out[i] = self.model.V(t, x) + s * bracket_norm(xi - self.model.A(t, x))
        return out


def integrate_flow(sign: int, model: PotentialModel, p0: PhasePoint, t: float,
                   tol: float = DEFAULT_TOL, sample_times=None) -> Trajectory:
    """Integrate the flow nu_t^sign from p0; endpoint is nu_t^sign(p0).

    With ``sample_times`` the trajectory is reported on that grid (via dense
    output); otherwise on the accepted steps.
    """
    if not np.isfinite(t):
        raise ValueError("time must be finite")
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def rhs(tt, y):
        dx, dxi = hamilton_rhs(sign, model, tt, PhasePoint(y[:3], y[3:]))
        return np.concatenate([dx, dxi])

    sol = integrate_rk45(rhs, 0.0, p0.as_vector(), t, rtol=tol, atol=tol,
                         sample_times=sample_times)
    if sample_times is not None:
        ts, ys = sol.sampled_ts, sol.sampled_ys
    else:
        ts, ys = sol.ts, sol.ys
    return Trajectory(sign=sign, model=model, ts=np.asarray(ts),
                      xs=ys[:, :3].copy(), xis=ys[:, 3:].copy(), stats=sol.stats)


def velocity_from_zeta(z) -> np.ndarray:
    """v = zeta/<zeta> (the + branch of the velocity-momentum relation)."""
    z = np.asarray(z, dtype=float)
    return z / bracket_norm(z)


def zeta_from_velocity(v) -> np.ndarray:
    """zeta = v/sqrt(1 - v^2); raises for |v| >= 1."""
    v = np.asarray(v, dtype=float)
    v2 = float(v @ v)
    if v2 >= 1.0:
        raise SuperluminalInput(f"|v| = {np.sqrt(v2):.17g} >= 1")
    return v / np.sqrt(1.0 - v2)


def lorentz_residual(sign: int, model: PotentialModel, traj: Trajectory) -> float:
    """Max deviation of the orbit from the Lorentz-force law.

    Differentiates the relativistic momentum x'/sqrt(1 - x'^2) = sign * zeta
    by 4th-order finite differences on the (uniform) sample grid and compares
    with sign (E + x' x B).
    """
    ts = traj.ts
    if len(ts) < 5:
        raise ValueError("trajectory too short for finite differencing")
    dt = np.diff(ts)
    if np.max(np.abs(dt - dt[0])) > 1e-9 * max(abs(dt[0]), 1e-300):
        raise ValueError("lorentz_residual needs uniform sample times")
    h = dt[0]
    s = 1.0 if traj.sign > 0 else -1.0

    mom = np.empty_like(traj.xs)
    for i, (t, x, xi) in enumerate(zip(ts, traj.xs, traj.xis)):
        mom[i] = s * (xi - model.A(t, x))

    worst = 0.0
    for i in range(2, len(ts) - 2):
        dmom = (mom[i - 2] - 8 * mom[i - 1] + 8 * mom[i + 1] - mom[i + 2]) / (12 * h)
        t, x = ts[i], traj.xs[i]
        z = traj.xis[i] - model.A(t, x)
        xdot = s * z / bracket_norm(z)
        force = s * (field_E(model, t, x) + np.cross(xdot, field_B(model, t, x)))
        worst = max(worst, float(np.max(np.abs(dmom - force))))
    return worst


def transport_scalar(q, sign: int, model: PotentialModel, t: float,
                     p: PhasePoint, tol: float = DEFAULT_TOL) -> complex:
    """Transported scalar symbol q_t(x, xi) = q(nu_t^sign(x, xi))."""
    end = integrate_flow(sign, model, p, t, tol=tol).endpoint
    return q(end.x, end.xi)

"""Order-annotated matrix symbols, finite-difference calculus, Leibniz formulas.

A symbol is a function a(t, x, xi) -> 4x4 complex matrix.  Derivatives are
taken by 4th-order central differences with a relative step scaled by
(1 + |coordinate|); that balances truncation against rounding for the 1e-6
oracle tolerances used downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .dirac import bracket_norm, projection_p, zeta
from .errors import SolvabilityViolation
from .fields import PotentialModel
from .matrices import matnorm

DEFAULT_FD_STEP = 1e-5

SymbolFn = Callable[[float, np.ndarray, np.ndarray], np.ndarray]


@dataclass
class MatrixSymbol:
    """A matrix-valued phase-space symbol with advisory order metadata.

    ``order`` is either a pair (xi-order, x-order) for the strictly classical
    class or a single number when only xi-decay is claimed; it is checked by
    :func:`order_probe`, never enforced.
    """

    eval: SymbolFn
    order: tuple[float, float] | float | None = None
    fd_step: float = DEFAULT_FD_STEP

    def __call__(self, t: float, x, xi) -> np.ndarray:
        return np.asarray(self.eval(t, np.asarray(x, float), np.asarray(xi, float)),
                          dtype=complex)


def scalar_symbol(f: Callable[[float, np.ndarray, np.ndarray], complex],
                  order=None) -> MatrixSymbol:
    """Wrap a scalar phase function as a multiple of the 4x4 identity."""
    return MatrixSymbol(lambda t, x, xi: f(t, x, xi) * np.eye(4, dtype=complex),
                        order=order)


def _step(base: float, coord: float) -> float:
    return base * (1.0 + abs(coord))


def fd_partial(s: MatrixSymbol, var: str, k: int, t: float, x, xi) -> np.ndarray:
    """4th-order central d/dvar_k of the symbol at (t, x, xi); var in {x, xi}."""
    x = np.asarray(x, dtype=float)
    xi = np.asarray(xi, dtype=float)
    c = x[k] if var == "x" else xi[k]
    h = _step(s.fd_step, c)

    def at(delta):
        if var == "x":
            xs = x.copy(); xs[k] += delta
            return s(t, xs, xi)
        xs = xi.copy(); xs[k] += delta
        return s(t, x, xs)

    return (at(-2 * h) - 8 * at(-h) + 8 * at(h) - at(2 * h)) / (12 * h)


def _fd_chain(s: MatrixSymbol, seq, t: float, x, xi) -> np.ndarray:
    var, k = seq[0]
    rest = seq[1:]
    if not rest:
        return fd_partial(s, var, k, t, x, xi)
    inner = MatrixSymbol(lambda tt, xx, xxi: _fd_chain(s, rest, tt, xx, xxi),
                         fd_step=s.fd_step)
    return fd_partial(inner, var, k, t, x, xi)


def fd_multi(s: MatrixSymbol, theta_x: Sequence[int], iota_xi: Sequence[int],
             t: float, x, xi) -> np.ndarray:
    """Mixed partial d_x^theta d_xi^iota by nested central stencils.

    The step is widened by a decade per extra derivative so that rounding
    noise (eps / h^n) stays below the stencil truncation error.
    """
    seq = []
    for k, n in enumerate(theta_x):
        seq += [("x", k)] * int(n)
    for k, n in enumerate(iota_xi):
        seq += [("xi", k)] * int(n)
    if not seq:
        return s(t, x, xi)
    widened = MatrixSymbol(s.eval, fd_step=s.fd_step * 10.0 ** (len(seq) - 1))
    return _fd_chain(widened, seq, t, x, xi)


def poisson_bracket(a: MatrixSymbol, b: MatrixSymbol, k: int,
                    t: float, x, xi) -> np.ndarray:
    """Generalized Poisson bracket {a, b}_k at a point.

    k = 1: sum_j a|xi_j b|x_j - b|xi_j a|x_j  (matrix factor order as in
    h|xi a|x - a|xi h|x).  k = 2: the second bracket with the (xi_i xi_j,
    x_i x_j) index pairs contracted symmetrically.
    """
    if k == 1:
        out = np.zeros((4, 4), dtype=complex)
        for j in range(3):
            out += fd_partial(a, "xi", j, t, x, xi) @ fd_partial(b, "x", j, t, x, xi)
            out -= fd_partial(b, "xi", j, t, x, xi) @ fd_partial(a, "x", j, t, x, xi)
        return out
    if k == 2:
        out = np.zeros((4, 4), dtype=complex)
        for i in range(3):
            for j in range(3):
                ei = [0, 0, 0]; ei[i] += 1
                ej = [0, 0, 0]; ej[j] += 1
                eij_x = [0, 0, 0]; eij_x[i] += 1; eij_x[j] += 1
                a_xixi = fd_multi(a, [0, 0, 0], eij_x, t, x, xi)
                b_xx = fd_multi(b, eij_x, [0, 0, 0], t, x, xi)
                b_xixi = fd_multi(b, [0, 0, 0], eij_x, t, x, xi)
                a_xx = fd_multi(a, eij_x, [0, 0, 0], t, x, xi)
                out += a_xixi @ b_xx - b_xixi @ a_xx
        return out
    raise ValueError("bracket order k must be 1 or 2")


def _multi_indices(n: int):
    for i in range(n + 1):
        for j in range(n + 1 - i):
            yield (i, j, n - i - j)


def _factorial_multi(theta) -> int:
    f = 1
    for n in theta:
        for m in range(2, n + 1):
            f *= m
    return f


def leibniz_product(a: MatrixSymbol, b: MatrixSymbol, N: int,
                    t: float, x, xi) -> np.ndarray:
    """Truncated Leibniz product symbol of a(x, D) b(x, D).

    sum over |theta| <= N of (-i)^{|theta|}/theta! d_xi^theta a . d_x^theta b;
    exact when a is a xi-polynomial of degree <= N.
    """
    if N < 0:
        raise ValueError("truncation order N must be >= 0")
    out = np.zeros((4, 4), dtype=complex)
    for n in range(N + 1):
        coef = (-1j) ** n
        for theta in _multi_indices(n):
            da = fd_multi(a, [0, 0, 0], theta, t, x, xi)
            db = fd_multi(b, theta, [0, 0, 0], t, x, xi)
            out += coef / _factorial_multi(theta) * (da @ db)
    return out


def leibniz_adjoint(a: MatrixSymbol, N: int, t: float, x, xi) -> np.ndarray:
    """Truncated symbol of a(x, D)^*: sum (-i)^{|theta|}/theta! d_xi^theta d_x^theta a^*."""
    if N < 0:
        raise ValueError("truncation order N must be >= 0")
    astar = MatrixSymbol(lambda tt, xx, xxi: a(tt, xx, xxi).conj().T,
                         fd_step=a.fd_step)
    out = np.zeros((4, 4), dtype=complex)
    for n in range(N + 1):
        coef = (-1j) ** n
        for theta in _multi_indices(n):
            out += coef / _factorial_multi(theta) * fd_multi(astar, theta, theta, t, x, xi)
    return out


_PROBE_DIRECTIONS = np.array(
    [
        [1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0],
        [0, 0, 1], [0, 0, -1],
        [1, 1, 1], [-1, 1, -1],
    ],
    dtype=float,
)
_PROBE_DIRECTIONS /= np.linalg.norm(_PROBE_DIRECTIONS, axis=1)[:, None]


@dataclass
class OrderFit:
    slope: float
    residual: float
    ok: bool
    radii: np.ndarray = field(repr=False, default=None)
    sups: np.ndarray = field(repr=False, default=None)


def order_probe(s: MatrixSymbol, theta, iota, radii: Sequence[float],
                which: str = "xi", t: float = 0.0, base_x=None, base_xi=None,
                reject_residual: float = 0.15) -> OrderFit:
    """Fit the growth exponent of ||d_x^theta d_xi^iota s|| along one variable.

    Samples the sup over a fixed 8-direction sphere at each radius and
    returns the log-log least-squares slope.  The fit is flagged not-ok when
    the rms residual of the linear fit exceeds ``reject_residual`` (symbols
    have power-law envelopes; anything else is non-symbol-like behavior).
    """
    radii = np.asarray(radii, dtype=float)
    if radii.min() <= 0 or radii.max() / radii.min() < 100.0:
        raise ValueError("radii must be positive and span at least 2 decades")
    base_x = np.zeros(3) if base_x is None else np.asarray(base_x, float)
    base_xi = np.zeros(3) if base_xi is None else np.asarray(base_xi, float)

    sups = np.empty_like(radii)
    for i, r in enumerate(radii):
        vals = []
        for d in _PROBE_DIRECTIONS:
            if which == "xi":
                x, xi = base_x, base_xi + r * d
            else:
                x, xi = base_x + r * d, base_xi
            vals.append(matnorm(fd_multi(s, theta, iota, t, x, xi)))
        sups[i] = max(vals)

    logs = np.log(np.maximum(sups, 1e-300))
    logr = np.log(radii)
    slope, intercept = np.polyfit(logr, logs, 1)
    resid = float(np.sqrt(np.mean((logs - (slope * logr + intercept)) ** 2)))
    return OrderFit(slope=float(slope), residual=resid,
                    ok=resid <= reject_residual, radii=radii, sups=sups)


def solve_commutator(model: PotentialModel, t: float, x, xi, Z: np.ndarray,
                     tol: float = 1e-8) -> np.ndarray:
    """Solve [h, z] = Z for z with vanishing commuting part.

    Requires the solvability condition that the eigenspace-diagonal blocks of
    Z vanish; then z = (p+ Z p- - p- Z p+) / (2 <xi - A>), which satisfies
    [h, z] = Z and p+ z p+ = p- z p- = 0.
    """
    pp = projection_p(+1, model, t, x, xi)
    pm = projection_p(-1, model, t, x, xi)
    nz = matnorm(Z)
    npp = matnorm(pp @ Z @ pp)
    nmm = matnorm(pm @ Z @ pm)
    if nz > 0 and (npp > tol * nz or nmm > tol * nz):
        raise SolvabilityViolation(npp, nmm, nz)
    az = bracket_norm(zeta(model, t, x, xi))
    return (pp @ Z @ pm - pm @ Z @ pp) / (2.0 * az)

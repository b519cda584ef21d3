"""Run configuration: JSON schema, defaults and validation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ConfigError

DEFAULT_TOLERANCES = {
    # algebra
    "clifford-relations": 1e-15,
    "self-adjointness": 1e-15,
    "projection-algebra": 1e-11,
    "eigenspace-sandwich": 1e-11,
    "upsilon-unitary": 1e-11,
    "upsilon-diagonalizes": 1e-11,
    "pauli-cross-identity": 1e-13,
    "gw-roundtrip": 1e-14,
    "restriction-roundtrip": 1e-11,
    # flow
    "free-flow-exact": 1e-10,
    "energy-conservation": 1e-8,
    "lorentz-residual": 1e-5,
    "flow-inversion": 1e-7,
    # spin
    "theta-vs-closed-form": 1e-5,
    "kappa-norm-conservation": 1e-7,
    "kappa-rotation-period": 1e-7,
    "kappa-rhs-consistency": 1e-9,
    "spin-rest-vectors": 1e-15,
    "spin-parallel-component": 1e-14,
    "spin-restriction-oracle": 1e-10,
    # plane wave
    "translation-conjugation": 1e-10,
    "gamma-closed-vs-quadrature": 1e-9,
    "collision-identity": 1e-10,
    "transverse-momentum-static": 1e-10,
    "momentum-symbol-selfadjoint": 1e-12,
    "momentum-symbol-initial": 1e-15,
    "transport-residual-slope": 0.05,
    "photon-ladder-one-round": 0.5,
    "photon-ladder-two-rounds": 0.5,
    # spectral
    "pq-scalar": 1e-13,
    "eigenfunction-residual": 1e-6,
    "cd-closed-vs-quadrature": 1e-10,
    "block-sum-identities": 1e-12,
    "coincidence-diagonal": 1e-12,
    "substitution-consistency": 1e-6,
    "projection-decay-slope": 0.05,
}


@dataclass
class RunConfig:
    """Scenario parameters; every field has a runnable default."""

    seed: int = 20240901
    tol_scale: float = 1.0
    coulomb_cf: float = 1.0 / 137.0
    coulomb_r0: float = 0.1
    uniform_b: tuple = (0.2, -0.4, 0.7)
    epsilon0: float = 0.2
    omega: float = 1.0
    flow_time: float = 20.0
    kappa_time: float = 10.0
    xi_decay_min: float = 1.0
    xi_decay_max: float = 1.0e4
    xi_decay_points: int = 13
    shift_grid_times: int = 24
    shift_grid_xi: int = 32
    tolerances: dict = field(default_factory=dict)

    def tolerance(self, name: str) -> float:
        base = self.tolerances.get(name, DEFAULT_TOLERANCES[name])
        return base * self.tol_scale

    def validate(self):
        if self.tol_scale <= 0:
            raise ConfigError("tol_scale must be positive")
        if self.coulomb_r0 <= 0:
            raise ConfigError("coulomb_r0 must be positive")
        if self.epsilon0 < 0 or self.omega <= 0:
            raise ConfigError("plane-wave parameters require epsilon0 >= 0, omega > 0")
        if self.xi_decay_points < 2 or self.xi_decay_min <= 0 \
                or self.xi_decay_max <= self.xi_decay_min:
            raise ConfigError("xi decay grid must be nonempty and increasing")
        if self.shift_grid_times < 2 or self.shift_grid_xi < 2:
            raise ConfigError("shift grid must be nonempty")
        for name, value in self.tolerances.items():
            if name not in DEFAULT_TOLERANCES:
                raise ConfigError(f"unknown tolerance name {name!r}")
            if not (isinstance(value, (int, float)) and value > 0):
                raise ConfigError(f"tolerance {name!r} must be positive")
        return self


_KEYS = {
    "seed": int,
    "tol_scale": float,
    "coulomb_cf": float,
    "coulomb_r0": float,
    "uniform_b": tuple,
    "epsilon0": float,
    "omega": float,
    "flow_time": float,
    "kappa_time": float,
    "xi_decay_min": float,
    "xi_decay_max": float,
    "xi_decay_points": int,
    "shift_grid_times": int,
    "shift_grid_xi": int,
    "tolerances": dict,
}


def load_config(path=None, overrides=None) -> RunConfig:
    """Read a JSON config file (all keys optional) and apply CLI overrides."""
    cfg = RunConfig()
    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError("config root must be a JSON object")
        for key, value in raw.items():
            if key not in _KEYS:
                raise ConfigError(f"unknown config key {key!r}")
            caster = _KEYS[key]
            try:
                setattr(cfg, key, caster(value))
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"bad value for {key!r}: {value!r}") from exc
    for key, value in (overrides or {}).items():
        if value is not None:
            setattr(cfg, key, value)
    return cfg.validate()

"""Exception types shared across the package."""


class DiracSymError(Exception):
    """Base class for all package-specific errors."""


class SolvabilityViolation(DiracSymError):
    """Right-hand side of the commutator equation has a diagonal part."""

    def __init__(self, norm_pp: float, norm_mm: float, norm_z: float):
        self.norm_pp = norm_pp
        self.norm_mm = norm_mm
        self.norm_z = norm_z
        super().__init__(
            f"commutator equation unsolvable: ||p+ Z p+|| = {norm_pp:.3e}, "
            f"||p- Z p-|| = {norm_mm:.3e} relative to ||Z|| = {norm_z:.3e}"
        )


class StepFailure(DiracSymError):
    """Adaptive step-size controller underflowed the minimum step."""

    def __init__(self, t: float, h: float, where=None):
        self.t = t
        self.h = h
        self.where = where
        msg = f"step size underflow at t = {t:.6g} (h = {h:.3e})"
        if where is not None:
            msg += f", state = {where}"
        super().__init__(msg)


class SuperluminalInput(DiracSymError):
    """Velocity argument with |v| >= 1 (speed of light is 1)."""


class CommutationViolation(DiracSymError):
    """Symbol expected to commute with the free Dirac symbol does not."""


class ZeroMomentum(DiracSymError):
    """Operation undefined at xi = 0."""


class ZeroLambda(DiracSymError):
    """Spectral parameter lambda = 0 is excluded."""


class ZeroMu(DiracSymError):
    """Green-kernel power of 1/mu undefined at mu = 0."""


class GridError(DiracSymError):
    """Invalid spectral grid specification."""


class QuadratureFailure(DiracSymError):
    """Adaptive quadrature did not reach the requested accuracy."""

    def __init__(self, achieved: float, requested: float):
        self.achieved = achieved
        self.requested = requested
        super().__init__(
            f"quadrature error estimate {achieved:.3e} exceeds requested {requested:.3e}"
        )


class ConfigError(DiracSymError):
    """Run configuration violates the schema."""

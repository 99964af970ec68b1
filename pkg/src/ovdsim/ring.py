"""N-vehicle ring-road state: periodic headways, uniform flow, perturbations.

Positions are stored unwrapped (monotonically growing); wrapping into
[0, L) is a display-time operation only, which keeps headways free of
seam discontinuities.  Vehicle n follows vehicle n+1, and the last
vehicle closes the ring onto the first one offset by the ring length.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError

__all__ = [
    "RingConfig",
    "RingState",
    "headways",
    "headways_from_positions",
    "uniform_flow",
    "perturb",
]


def headways_from_positions(x: np.ndarray, ring_length: float) -> np.ndarray:
    """Periodic headways of an unwrapped position array (no validation)."""
    dx = np.empty_like(x)
    dx[:-1] = x[1:] - x[:-1]
    dx[-1] = x[0] + ring_length - x[-1]
    return dx


@dataclass(frozen=True)
class RingConfig:
    """Ring geometry: N vehicles on a loop of length L."""

    n_vehicles: int
    ring_length: float

    def __post_init__(self):
        if not (isinstance(self.n_vehicles, (int, np.integer)) and self.n_vehicles >= 2):
            raise ConfigurationError(f"n_vehicles must be an integer >= 2, got {self.n_vehicles}")
        if not (np.isfinite(self.ring_length) and self.ring_length > 0):
            raise ConfigurationError(f"ring_length must be positive, got {self.ring_length}")

    @property
    def headway(self) -> float:
        """Equilibrium spacing b = L / N."""
        return self.ring_length / self.n_vehicles


@dataclass
class RingState:
    """Positions and velocities of all vehicles at one time instant."""

    t: float
    x: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=float)
        self.v = np.asarray(self.v, dtype=float)
        if self.x.shape != self.v.shape or self.x.ndim != 1:
            raise ConfigurationError(
                f"x and v must be 1-d arrays of equal length, got {self.x.shape} and {self.v.shape}"
            )

    def copy(self) -> "RingState":
        return RingState(self.t, self.x.copy(), self.v.copy())


def headways(state: RingState, config: RingConfig) -> np.ndarray:
    """Spacing to each leader with periodic closure.

    dx[n] = x[n+1] - x[n] for n < N-1, and dx[N-1] = x[0] + L - x[N-1];
    the headways sum to L up to rounding.
    """
    x = state.x
    if x.shape[0] != config.n_vehicles:
        raise ConfigurationError(
            f"state has {x.shape[0]} vehicles but config expects {config.n_vehicles}"
        )
    return headways_from_positions(x, config.ring_length)


def uniform_flow(config: RingConfig, ov) -> RingState:
    """Equilibrium state at t = 0: x[n] = n b and v[n] = V(b) for all n.

    Every acceleration law vanishes identically on this state, so both
    integration schemes preserve it exactly.
    """
    b = config.headway
    n = np.arange(config.n_vehicles, dtype=float)
    return RingState(t=0.0, x=b * n, v=np.full(config.n_vehicles, ov.value(b), dtype=float))


def perturb(state: RingState, vehicle_index: int, dx: float) -> RingState:
    """Return a copy of the state with one vehicle displaced by dx.

    Only the headways behind and ahead of the displaced vehicle change
    (by +dx and -dx); the headway sum identity is untouched.
    """
    n = state.x.shape[0]
    if not 0 <= vehicle_index < n:
        raise IndexError(f"vehicle_index {vehicle_index} out of range for {n} vehicles")
    if not np.isfinite(dx):
        raise ValueError(f"dx must be finite, got {dx}")
    out = state.copy()
    out.x[vehicle_index] += dx
    return out

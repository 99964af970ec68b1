"""Per-vehicle acceleration laws and their analytic jerk.

``ClassicalOVM`` relaxes the speed linearly toward the desired speed with
constant sensitivity alpha.  ``HybridOVD`` replaces the linear relaxation
with a quadratic drag-style saturation

    dv/dt = a * (1 - v^2 / V_des^2),

which equals ``a`` at standstill, vanishes at ``v = V_des``, and brakes for
``v > V_des``.  Its acceleration is bounded by ``a`` on 0 <= v <= V_des,
and near equilibrium it behaves like a classical law with effective
sensitivity 2 a / V_des.

All methods accept scalars or numpy arrays and are pure; law objects are
immutable and safe to share between threads.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError

__all__ = ["ClassicalOVM", "HybridOVD", "single_vehicle_solution", "make_model_law"]


def _require_finite(v, v_des):
    if not (np.all(np.isfinite(v)) and np.all(np.isfinite(v_des))):
        raise ValueError("speed and desired speed must be finite")


@dataclass(frozen=True)
class ClassicalOVM:
    """Linear relaxation law dv/dt = alpha * (V_des - v)."""

    alpha: float

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and self.alpha > 0):
            raise ConfigurationError(f"alpha must be positive, got {self.alpha}")

    def accel(self, v, v_des):
        _require_finite(v, v_des)
        return self.alpha * (np.asarray(v_des, dtype=float) - v)

    def jerk(self, v, v_des):
        """d^2v/dt^2 along a trajectory with frozen V_des: -alpha^2 (V_des - v)."""
        _require_finite(v, v_des)
        return -self.alpha**2 * (np.asarray(v_des, dtype=float) - v)


@dataclass(frozen=True)
class HybridOVD:
    """Drag-saturation law dv/dt = a * (1 - v^2 / V_des^2).

    V_des is floored at ``v_floor`` before the division so that a
    vanishing desired speed produces strong braking instead of a
    singularity.  The floor only matters for OV functions that approach
    zero (sigmoid at tiny headways); keep it far below typical speeds.
    """

    a: float
    v_floor: float = 1e-9

    def __post_init__(self):
        if not (np.isfinite(self.a) and self.a > 0):
            raise ConfigurationError(f"acceleration scale a must be positive, got {self.a}")
        if not (np.isfinite(self.v_floor) and self.v_floor >= 0):
            raise ConfigurationError(f"v_floor must be nonnegative, got {self.v_floor}")

    def _floored(self, v_des):
        return np.maximum(np.asarray(v_des, dtype=float), self.v_floor)

    def accel(self, v, v_des):
        _require_finite(v, v_des)
        vd = self._floored(v_des)
        return self.a * (1.0 - np.square(np.asarray(v, dtype=float)) / np.square(vd))

    def effective_sensitivity(self, v, v_des):
        """State-dependent sensitivity a (V_des + v) / V_des^2.

        Factors the law as accel = effective_sensitivity * (V_des - v); at
        v = V_des this reduces to 2 a / V_des.
        """
        _require_finite(v, v_des)
        vd = self._floored(v_des)
        return self.a * (vd + v) / np.square(vd)

    def jerk(self, v, v_des):
        """d^2v/dt^2 with frozen V_des: -(2 a^2 / V_des^2) v (1 - v^2 / V_des^2).

        Cubic in v: zero at v = 0 and v = V_des, negative between, positive
        beyond V_des.
        """
        _require_finite(v, v_des)
        vd = self._floored(v_des)
        vv = np.asarray(v, dtype=float)
        return -(2.0 * self.a**2 / np.square(vd)) * vv * (1.0 - np.square(vv) / np.square(vd))


def single_vehicle_solution(a: float, v_max: float, v0: float, t):
    """Closed-form speed of one drag-limited vehicle with fixed top speed.

    Solves dv/dt = a (1 - v^2 / v_max^2), v(0) = v0:

        v(t) = v_max * tanh(a t / v_max + artanh(v0 / v_max))

    Monotone increasing in t with limit v_max.  Requires 0 <= v0 < v_max
    (artanh is undefined at or beyond 1) and t >= 0.
    """
    if not (np.isfinite(a) and a > 0):
        raise ValueError(f"a must be positive, got {a}")
    if not (np.isfinite(v_max) and v_max > 0):
        raise ValueError(f"v_max must be positive, got {v_max}")
    if not (0 <= v0 < v_max):
        raise ValueError(f"v0 must satisfy 0 <= v0 < v_max, got v0={v0}, v_max={v_max}")
    if np.any(np.asarray(t) < 0):
        raise ValueError("t must be nonnegative")
    return v_max * np.tanh((a / v_max) * np.asarray(t, dtype=float) + math.atanh(v0 / v_max))


def make_model_law(kind: str, **params):
    """Build a model law from a config-style kind string."""
    key = kind.strip().lower()
    try:
        if key in ("classical", "ovm", "classical_ovm"):
            return ClassicalOVM(**params)
        if key in ("hybrid", "ovd", "hybrid_ovd"):
            return HybridOVD(**params)
    except TypeError as exc:
        raise ConfigurationError(f"bad parameters for model law {kind!r}: {exc}") from exc
    raise ConfigurationError(f"unknown model law kind {kind!r} (expected 'classical' or 'hybrid')")

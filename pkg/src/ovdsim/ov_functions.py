"""Desired-velocity functions V(headway) and their exact first derivatives.

Two families are provided:

* ``TanhOV``: V(s) = tanh(s), parameter free, in nondimensional units.
  All ring presets use this form, so equilibrium speeds like
  tanh(2.0) = 0.964 come out directly.
* ``SigmoidOV``: V(s) = (v_max / 2) * (tanh((s - h_c) / ell) + 1), the
  saturating headway-speed map common in car-following work, in SI-like
  units (m, s).

Both are monotonically increasing and bounded, and both expose the
analytic derivative so stability thresholds built from V'(b) are exact
to machine precision.  Negative headways (pre-collision transients) are
evaluated as defined rather than clamped.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError

__all__ = ["TanhOV", "SigmoidOV", "make_ov_function"]


def _require_finite(headway):
    if not np.all(np.isfinite(headway)):
        raise ValueError("headway must be finite")


def _sech2(s):
    # 4 e^{-2|s|} / (1 + e^{-2|s|})^2, overflow-free for any finite s
    e = np.exp(-2.0 * np.abs(s))
    return 4.0 * e / np.square(1.0 + e)


@dataclass(frozen=True)
class TanhOV:
    """V(s) = tanh(s) with V'(s) = sech^2(s)."""

    @property
    def sup(self) -> float:
        """Least upper bound of V; V(s) < 1 for all s."""
        return 1.0

    def value(self, headway):
        _require_finite(headway)
        return np.tanh(headway)

    def deriv(self, headway):
        _require_finite(headway)
        return _sech2(headway)


@dataclass(frozen=True)
class SigmoidOV:
    """V(s) = (v_max / 2) * (tanh((s - h_c) / ell) + 1).

    Attributes:
        v_max: free-flow speed, the supremum of V.
        h_c: critical headway; V(h_c) = v_max / 2 exactly.
        ell: slope length scale, must be positive.
    """

    v_max: float = 30.0
    h_c: float = 25.0
    ell: float = 10.0

    def __post_init__(self):
        if not (np.isfinite(self.v_max) and self.v_max > 0):
            raise ConfigurationError(f"v_max must be positive, got {self.v_max}")
        if not np.isfinite(self.h_c):
            raise ConfigurationError(f"h_c must be finite, got {self.h_c}")
        if not (np.isfinite(self.ell) and self.ell > 0):
            raise ConfigurationError(f"ell must be positive, got {self.ell}")

    @property
    def sup(self) -> float:
        return self.v_max

    def value(self, headway):
        _require_finite(headway)
        z = (np.asarray(headway, dtype=float) - self.h_c) / self.ell
        out = 0.5 * self.v_max * (np.tanh(z) + 1.0)
        return out if out.ndim else float(out)

    def deriv(self, headway):
        _require_finite(headway)
        z = (np.asarray(headway, dtype=float) - self.h_c) / self.ell
        out = 0.5 * self.v_max / self.ell * _sech2(z)
        return out if out.ndim else float(out)


def make_ov_function(kind: str, **params):
    """Build an OV function from a config-style kind string."""
    key = kind.strip().lower()
    if key == "tanh":
        if params:
            raise ConfigurationError(f"tanh OV function takes no parameters, got {sorted(params)}")
        return TanhOV()
    if key == "sigmoid":
        try:
            return SigmoidOV(**params)
        except TypeError as exc:
            raise ConfigurationError(f"bad sigmoid OV parameters: {exc}") from exc
    raise ConfigurationError(f"unknown OV function kind {kind!r} (expected 'tanh' or 'sigmoid')")

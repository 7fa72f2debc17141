"""Uniform-grid profiles on [-L, L] and the unit-window averaging operator.

Profiles carry constant boundary extensions (-1 on the left, +1 on the right
for heteroclinic data; 0/0 for perturbations).  The averaging operator takes
the mean of a profile over the unit window centred at each node, realized as a
composite trapezoid sum; the grid is constrained so that half a window is an
integer number of cells, which makes the discrete operator exactly symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GridMismatch, WindowMisaligned


@dataclass(frozen=True)
class GridProfile:
    """Values of a profile at the nodes phi_k = -L + 2kL/D, k = 0..D."""

    L: float
    D: int
    values: np.ndarray
    left_value: float = -1.0
    right_value: float = 1.0

    def __post_init__(self):
        if self.L < 2:
            raise ValueError("half-width L must be at least 2")
        if self.D <= 0:
            raise ValueError("D must be positive")
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.D + 1,):
            raise ValueError(f"values must have length D+1 = {self.D + 1}")
        object.__setattr__(self, "values", v)
        h = 2.0 * self.L / self.D
        k = 1.0 / (2.0 * h)
        if abs(k - round(k)) > 1e-9 or round(k) < 1:
            raise WindowMisaligned(
                f"1/(2h) = {k} must be a positive integer so the averaging "
                "window aligns with grid nodes"
            )

    @property
    def h(self) -> float:
        return 2.0 * self.L / self.D

    @property
    def K(self) -> int:
        """Number of cells in half an averaging window."""
        return round(1.0 / (2.0 * self.h))

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(-self.L, self.L, self.D + 1)

    def with_values(self, values: np.ndarray) -> "GridProfile":
        return GridProfile(self.L, self.D, np.asarray(values, dtype=float),
                           self.left_value, self.right_value)

    def extended(self, pad: int) -> np.ndarray:
        """Values on ``pad`` extra nodes each side, using the constant extension."""
        return np.concatenate([
            np.full(pad, self.left_value),
            self.values,
            np.full(pad, self.right_value),
        ])

    def same_grid(self, other: "GridProfile") -> bool:
        return self.L == other.L and self.D == other.D

    def index_of(self, phi: float) -> int:
        """Nearest node index for a phase value."""
        return int(round((phi + self.L) / self.h))


def shock_profile(L: float, D: int) -> GridProfile:
    """The signum profile: -1 left of the origin, +1 right, 0 at the node phi=0."""
    prof = GridProfile(L, D, np.zeros(D + 1))
    return prof.with_values(np.sign(prof.nodes))


def window_kernel(K: int) -> np.ndarray:
    """Composite-trapezoid weights for the unit window, summing to 1."""
    h = 1.0 / (2 * K)
    kern = np.full(2 * K + 1, h)
    kern[0] *= 0.5
    kern[-1] *= 0.5
    return kern


def averaged_extended(profile: GridProfile, pad: int) -> np.ndarray:
    """Averaged values on the node range extended by ``pad`` nodes each side."""
    K = profile.K
    ext = profile.extended(pad + K)
    return np.convolve(ext, window_kernel(K), mode="valid")


def apply_averaging(profile: GridProfile) -> GridProfile:
    """Trapezoid average of the profile over the unit window at each node.

    Boundary extension values are averaging fixed points, so the result
    inherits the same extension.
    """
    return profile.with_values(averaged_extended(profile, 0))


def inner_product(w1: GridProfile, w2: GridProfile) -> float:
    """Trapezoid quadrature of the product over [-L, L].

    The tail contribution is exact (zero) whenever the product of the
    extensions vanishes; callers are responsible for integrability.
    """
    if not w1.same_grid(w2):
        raise GridMismatch("profiles live on different grids")
    return float(np.trapezoid(w1.values * w2.values, dx=w1.h))

"""The discretized action functional, its pieces, and its gradient.

The total action of a profile W splits into a renormalized quadratic part and
a potential part,

    total = quad_n(W) + potential_p(W),

and its gradient with respect to the flat L2 structure is
``W - A phi'(A W)`` where A is the unit-window average.  All integrals are
evaluated through the compact-perturbation shortcut: on a grid whose outer
nodes agree exactly with the boundary extension, every integrand below has
compact support inside [-L-1, L+1], so plain trapezoid sums are exact
restatements of the defining improper integrals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridMismatch, NonZeroTails, TailNotConverged
from .grid import GridProfile, apply_averaging, averaged_extended, window_kernel
from .potentials import Potential

# The averaging operator spreads support by half a window, its square by a
# full window; one extra unit of domain covers every integrand.
_PAD_UNITS = 1


@dataclass
class ActionReport:
    """Per-iteration functional values recorded by the solver."""

    M: float
    N: float
    P: float
    L: float
    grad_norm: float


def _require_exact_tails(profile: GridProfile) -> None:
    k2 = 2 * profile.K
    v = profile.values
    if not (np.all(v[:k2] == profile.left_value) and np.all(v[-k2:] == profile.right_value)):
        raise TailNotConverged(
            "outer nodes must agree exactly with the boundary extension"
        )


def _extended_pair(profile: GridProfile):
    """(W, A W) on the grid extended by one window width each side."""
    pad = 2 * profile.K * _PAD_UNITS
    w_ext = profile.extended(pad)
    u_ext = averaged_extended(profile, pad)
    return w_ext, u_ext


def functional_N(profile: GridProfile) -> float:
    """Renormalized quadratic part: half-integral of W^2 - (A W)^2."""
    _require_exact_tails(profile)
    w_ext, u_ext = _extended_pair(profile)
    return float(0.5 * np.trapezoid(w_ext**2 - u_ext**2, dx=profile.h))


def functional_P(profile: GridProfile, pot: Potential) -> float:
    """Potential part: integral of psi(A W); tails contribute nothing since
    psi(+-1) = 0."""
    _require_exact_tails(profile)
    _, u_ext = _extended_pair(profile)
    return float(np.trapezoid(pot.psi(u_ext), dx=profile.h))


def functional_L(profile: GridProfile, pot: Potential) -> float:
    """Total action."""
    return functional_N(profile) + functional_P(profile, pot)


def quadratic_M(perturbation: GridProfile) -> float:
    """Quadratic form on compactly supported perturbations; nonnegative."""
    if perturbation.left_value != 0.0 or perturbation.right_value != 0.0:
        raise NonZeroTails("perturbation extension must be zero")
    k2 = 2 * perturbation.K
    v = perturbation.values
    if np.any(v[:k2] != 0.0) or np.any(v[-k2:] != 0.0):
        raise NonZeroTails("perturbation must vanish on the boundary region")
    w_ext, u_ext = _extended_pair(perturbation)
    return float(0.5 * np.trapezoid(w_ext**2 - u_ext**2, dx=perturbation.h))


def gradient(profile: GridProfile, pot: Potential) -> GridProfile:
    """Action gradient W - A phi'(A W), returned as a perturbation profile.

    The boundary extension of the result is zero: outside the computational
    window the profile is frozen at its asymptotic states.
    """
    pad = profile.K
    u_ext = averaged_extended(profile, pad)
    p_ext = pot.phi_prime(u_ext)
    ap = np.convolve(p_ext, window_kernel(profile.K), mode="valid")
    g = profile.values - ap
    return GridProfile(profile.L, profile.D, g, left_value=0.0, right_value=0.0)


def grad_norm(g: GridProfile) -> float:
    """l2 norm scaled by sqrt(h), the discrete L2 norm of the gradient."""
    return float(np.sqrt(g.h * np.sum(g.values**2)))


def n_identity_check(w1: GridProfile, w2: GridProfile) -> float:
    """Defect of the exact discrete decomposition of the quadratic part:

        N(W2) = N(W1) + M(W2 - W1) + <W2 - W1, W1 - A^2 W1>.

    Should be at machine-rounding scale because the discrete averaging
    operator is exactly symmetric on aligned grids.
    """
    if not w1.same_grid(w2):
        raise GridMismatch("profiles live on different grids")
    _require_exact_tails(w1)
    _require_exact_tails(w2)
    diff = GridProfile(w1.L, w1.D, w2.values - w1.values,
                       left_value=0.0, right_value=0.0)
    u1 = apply_averaging(apply_averaging(w1))
    pairing = float(np.trapezoid(diff.values * (w1.values - u1.values), dx=w1.h))
    lhs = functional_N(w2)
    rhs = functional_N(w1) + quadratic_M(diff) + pairing
    return abs(lhs - rhs)


def relative_action(profile: GridProfile, pot: Potential, reference: GridProfile) -> float:
    """Action relative to a reference profile (usually the shock)."""
    return functional_L(profile, pot) - functional_L(reference, pot)

"""Separation-of-phases diagnostics for averaged profiles.

The averaged profile U of a candidate front takes values near -1 (negative
phase) and near +1 (positive phase), linked by transition layers.  The zero
set {|U| <= 1/2} must be covered by finitely many layer intervals, each of
which carries a guaranteed minimum action cost; a converged front has exactly
one layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AnchorNotInZeroSet, EmptyZeroSet, LayerCostBelowBound, SignInconsistent
from .grid import GridProfile, apply_averaging
from .potentials import Potential


@dataclass
class PhaseSeparation:
    """Ordered transition-layer intervals covering the zero set."""

    intervals: list[tuple[float, float]]
    anchors: list[float]
    signs: list[int]
    eta_bar: float
    m: int
    sign_consistent: bool = True
    conflicts: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "eta_bar": self.eta_bar,
            "intervals": [list(iv) for iv in self.intervals],
            "anchors": self.anchors,
            "signs": self.signs,
            "sign_consistent": self.sign_consistent,
        }


def zero_set(u: GridProfile) -> np.ndarray:
    """Node indices where |U| <= 1/2; empty for degenerate profiles."""
    idx = np.nonzero(np.abs(u.values) <= 0.5)[0]
    if idx.size == 0:
        raise EmptyZeroSet("no node with |U| <= 1/2; profile does not transition")
    return idx


def eta_bar_for(gamma: float) -> float:
    """Half-width over which an averaged profile in the constraint set cannot
    leave [-3/4, 3/4] around a zero-set point (Lipschitz constant 2*gamma)."""
    return 1.0 / (8.0 * gamma)


def mu_bar_for(pot: Potential, gamma: float, n_samples: int = 20_001) -> float:
    """Guaranteed lower bound for the layer cost integral.

    Computed as 2*eta_bar times the smallest defect value a layer can realize:
    within eta_bar of a zero-set point the averaged profile stays in
    [-3/4, 3/4] and cannot move further than 1/4 from its anchor value, so
    |U| stays in a band where the defect is bounded below by its minimum over
    1/4 <= |u| <= 3/4 ... conservatively, over |u| <= 3/4.
    """
    eta = eta_bar_for(gamma)
    u = np.linspace(-0.75, 0.75, n_samples)
    band = np.abs(u) >= 0.25
    inf_psi = float(np.min(pot.psi(u[band])))
    return 2.0 * eta * max(inf_psi, 0.0)


def separate_phases(u: GridProfile, gamma: float, strict: bool = False) -> PhaseSeparation:
    """Greedy construction of a separation of phases for an averaged profile.

    Anchors at the smallest uncovered zero-set point, opens an interval of
    half-width 2*eta_bar around it, repeats, then merges overlaps.  Signs are
    read off the gaps between consecutive intervals and the two tails; a gap
    on which U is not uniformly signed is flagged (and raised when
    ``strict``).
    """
    nodes = u.nodes
    zmask = np.abs(u.values) <= 0.5
    zidx = np.nonzero(zmask)[0]
    if zidx.size == 0:
        raise EmptyZeroSet("no node with |U| <= 1/2")
    eta = eta_bar_for(gamma)

    anchors = []
    raw_intervals = []
    covered_until = -np.inf
    for i in zidx:
        phi = nodes[i]
        if phi <= covered_until:
            continue
        anchors.append(float(phi))
        raw_intervals.append((phi - 2 * eta, phi + 2 * eta))
        covered_until = phi + 2 * eta

    # Merge overlapping or touching intervals, then snap outward to nodes.
    merged = [list(raw_intervals[0])]
    for lo, hi in raw_intervals[1:]:
        if lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    h = u.h
    intervals = [
        (float(np.floor((lo + u.L) / h) * h - u.L),
         float(np.ceil((hi + u.L) / h) * h - u.L))
        for lo, hi in merged
    ]

    signs = []
    conflicts = []
    gap_edges = [(-np.inf, intervals[0][0])]
    for (a, b) in zip(intervals[:-1], intervals[1:]):
        gap_edges.append((a[1], b[0]))
    gap_edges.append((intervals[-1][1], np.inf))
    for gi, (lo, hi) in enumerate(gap_edges):
        inside = (nodes > lo) & (nodes < hi)
        vals = u.values[inside]
        if lo == -np.inf:
            s = -1
        elif hi == np.inf:
            s = +1
        elif vals.size:
            s = int(np.sign(np.mean(np.sign(vals))) or 1)
        else:
            s = signs[-1]
        if vals.size and (np.any(vals * s <= 0)):
            conflicts.append(gi)
        signs.append(s)

    consistent = not conflicts
    if strict and not consistent:
        raise SignInconsistent(f"gaps {conflicts} are not uniformly signed")
    return PhaseSeparation(
        intervals=intervals,
        anchors=anchors,
        signs=signs,
        eta_bar=eta,
        m=len(intervals),
        sign_consistent=consistent,
        conflicts=conflicts,
    )


def layer_cost(w: GridProfile, pot: Potential, anchor: float, gamma: float) -> float:
    """Defect integral over one transition layer around ``anchor``.

    Raises when the anchor is not in the zero set, or when the measured cost
    undercuts the guaranteed bound (which signals a profile far outside the
    constraint set).
    """
    u = apply_averaging(w)
    i = u.index_of(anchor)
    i = min(max(i, 0), u.D)
    if abs(u.values[i]) > 0.5:
        raise AnchorNotInZeroSet(f"|U({anchor})| = {abs(u.values[i]):.3f} > 1/2")
    eta = eta_bar_for(gamma)
    nodes = u.nodes
    mask = np.abs(nodes - anchor) <= eta + 1e-12
    cost = float(np.trapezoid(pot.psi(u.values[mask]), dx=u.h))
    bound = mu_bar_for(pot, gamma)
    if bound > 0 and cost < bound * (1.0 - 1e-6) - 1e-12:
        raise LayerCostBelowBound(f"cost {cost:.3e} below bound {bound:.3e}")
    return cost


def is_monotone(w: GridProfile, tol: float = 1e-12) -> bool:
    """Nondecreasing profile check."""
    return bool(np.all(np.diff(w.values) >= -tol))


def interior_plateau(
    w: GridProfile,
    min_nodes: int = 50,
    value_tol: float = 1e-3,
    distinct_tol: float = 1e-2,
    margin_units: float = 2.0,
) -> tuple[float, int] | None:
    """Longest interior run of near-constant values away from +-1.

    Returns (plateau value, run length in nodes) or None.  Used by the solver
    to detect the action-unbounded failure mode where iterates grow a plateau
    at an interior defect minimizer.
    """
    nodes = w.nodes
    interior = np.abs(nodes) <= w.L - margin_units
    v = w.values[interior]
    if v.size < min_nodes:
        return None
    # Candidate plateau level: locally flat nodes away from both states.
    flat = np.abs(np.diff(v)) <= value_tol
    cand = v[1:][flat]
    cand = cand[np.minimum(np.abs(cand - 1.0), np.abs(cand + 1.0)) > distinct_tol]
    if cand.size == 0:
        return None
    val = float(np.median(cand))
    close = np.abs(v - val) <= value_tol
    # Longest consecutive run at that level.
    best = 0
    run = 0
    for flag in close:
        run = run + 1 if flag else 0
        best = max(best, run)
    if best < min_nodes:
        return None
    return val, best

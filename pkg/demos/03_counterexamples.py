"""When admissibility fails: plateau growth instead of a front.

Two defective families. The graph-violating quartic dips the defect Psi
below zero at an interior value u*, so action can be bought at a linear
rate by widening a plateau at u*: the flow never converges and the action
decreases by |Psi(u*)| per unit of plateau. The tilted quartic hides the
same defect at u* = -1.107, just below the left state.
"""

import numpy as np

from fpufronts import (
    GraphViolatingPotential,
    GridProfile,
    SolverConfig,
    TiltedPotential,
    check_assumptions,
    minimize,
)
from fpufronts.phases import interior_plateau


def run(name, pot):
    rep = check_assumptions(pot)
    print(f"--- {name} ---")
    print(f"failed admissibility conditions: {rep.failed_conditions()}")
    print(f"defect minimum Psi = {rep.psi_min:+.5f} at u = {rep.psi_argmin:+.5f}")

    cfg = SolverConfig(gamma=2.0)
    widths = []

    def trace(it, values):
        pl = interior_plateau(GridProfile(cfg.L, cfg.D, values))
        widths.append(pl[1] if pl else 0)

    res = minimize(cfg, pot, callback=trace)
    print(f"outcome: {res.outcome} at iteration {res.iterations}")
    print(f"plateau value w* = {res.plateau_value:+.5f} "
          f"(defect minimizer: {rep.psi_argmin:+.5f})")

    actions = np.array([r.L for r in res.history])
    h = 2 * cfg.L / cfg.D
    i0, i1 = 60, min(140, len(actions) - 1)
    slope = (actions[i0] - actions[i1]) / (i1 - i0)
    growth = (widths[i1] - widths[i0]) / (i1 - i0) * h
    predicted = abs(float(pot.psi(res.plateau_value))) * growth
    print(f"action decrease per step: {slope:.3e}")
    print(f"|Psi(w*)| x plateau growth: {predicted:.3e} "
          f"(ratio {slope / predicted:.3f})")
    print()


def main():
    run("graph-violating quartic (beta = 0.1, c = -0.5)",
        GraphViolatingPotential(0.1, -0.5))
    run("tilted quartic (beta = 0.1, eps = 0.1)",
        TiltedPotential(0.1, 0.1))
    print("both runs classify as plateau_diverging: the action is unbounded")
    print("below and no front exists, exactly the failure the admissibility")
    print("report predicts from the sign of Psi alone")


if __name__ == "__main__":
    main()

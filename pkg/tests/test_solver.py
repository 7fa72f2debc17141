import numpy as np
import pytest

from fpufronts import (
    ActionReport,
    GraphViolatingPotential,
    QuarticPotential,
    SolverConfig,
    TiltedPotential,
    apply_averaging,
    classify_outcome,
    compute_invariant_bound,
    euler_step,
    gradient,
    is_monotone,
    minimize,
    separate_phases,
    shock_profile,
)
from fpufronts.errors import ConfigInvalid


def test_config_validation():
    with pytest.raises(ConfigInvalid):
        SolverConfig(lambda0=1.5).validate()
    with pytest.raises(ConfigInvalid):
        SolverConfig(lambda0=0.0).validate()
    with pytest.raises(ConfigInvalid):
        SolverConfig(gamma=0.5).validate()
    SolverConfig().validate()


def test_euler_step_fixed_point(front_005):
    res = front_005["result"]
    pot = front_005["pot"]
    out = euler_step(res.profile, pot, 0.5)
    assert np.max(np.abs(out.values - res.profile.values)) < 1e-8


def test_euler_step_local_support():
    sh = shock_profile(20.0, 3200)
    pot = QuarticPotential(0.05)
    out = euler_step(sh, pot, 0.5)
    nodes = sh.nodes
    outside = np.abs(nodes) > 1.0 + sh.h
    assert np.max(np.abs(out.values[outside] - sh.values[outside])) < 1e-14


def test_euler_step_lambda_range():
    sh = shock_profile(20.0, 3200)
    with pytest.raises(ConfigInvalid):
        euler_step(sh, QuarticPotential(0.1), 1.0)


def test_front_converged_quartic_mild(front_005):
    res = front_005["result"]
    assert res.outcome == "front_converged"
    assert res.final_grad_norm <= 1e-8
    assert is_monotone(res.profile)
    g = gradient(res.profile, front_005["pot"])
    interior = np.abs(res.profile.nodes) <= res.profile.L - 1
    assert np.max(np.abs(g.values[interior])) < 1e-8


def test_front_converged_quartic_strong_overshoot(front_03):
    res = front_03["result"]
    assert res.outcome == "front_converged"
    assert not is_monotone(res.profile)
    assert np.max(res.profile.values) > 1.0
    assert np.min(res.profile.values) < -1.0


def test_action_history_nonincreasing(front_005, front_03):
    for fx in (front_005, front_03):
        ls = [rep.L for rep in fx["result"].history]
        assert all(b <= a + 1e-14 for a, b in zip(ls[:-1], ls[1:]))


def test_front_profile_antisymmetric(front_005):
    # odd force keeps the antisymmetry of the shock initial data
    v = front_005["result"].profile.values
    assert np.max(np.abs(v + v[::-1])) < 1e-10


def test_determinism(front_005):
    cfg = SolverConfig(gamma=front_005["gamma"])
    res = minimize(cfg, QuarticPotential(0.05))
    assert np.array_equal(res.profile.values, front_005["result"].profile.values)
    assert res.iterations == front_005["result"].iterations


def test_graph_violating_plateau_divergence():
    pot = GraphViolatingPotential(0.1, -0.5)
    cfg = SolverConfig(gamma=2.0)
    res = minimize(cfg, pot)
    assert res.outcome == "plateau_diverging"
    w = res.plateau_value
    assert abs(w - float(pot.phi_prime(w))) <= 1e-3
    assert abs(w) < 0.1  # the defect minimizer of this family sits at 0


def test_tilted_plateau_at_global_defect_minimizer():
    # the +0.1 tilt makes psi smallest near u = -1.107, where the flow
    # grows its plateau; see the acceptance notes for the phenomenology
    pot = TiltedPotential(0.1, 0.1)
    cfg = SolverConfig(gamma=2.0)
    res = minimize(cfg, pot)
    assert res.outcome == "plateau_diverging"
    assert res.plateau_value == pytest.approx(-1.107, abs=5e-3)


def test_mesh_refinement_consistency():
    pot = QuarticPotential(0.05)
    gamma = compute_invariant_bound(pot)
    coarse = minimize(SolverConfig(gamma=gamma, D=1600), pot)
    fine = minimize(SolverConfig(gamma=gamma, D=3200), pot)
    diff = np.max(np.abs(coarse.profile.values - fine.profile.values[::2]))
    h = coarse.profile.h
    assert diff < 2.0 * h**2


def test_classify_synthetic_plateau_history():
    # linearly decreasing action plus a widening interior plateau
    history = [ActionReport(M=0.0, N=0.0, P=0.0, L=-0.001 * i, grad_norm=0.1)
               for i in range(600)]
    L, D = 20.0, 3200
    nodes = np.linspace(-L, L, D + 1)
    v = np.sign(nodes)
    v[np.abs(nodes) <= 4] = 0.15
    prof = shock_profile(L, D).with_values(v)
    out = classify_outcome(history, prof, QuarticPotential(0.1),
                           stagnation_window=500, plateau_growth=10)
    assert out == "plateau_diverging"


def test_classify_collapsed_profile():
    history = [ActionReport(M=0.0, N=0.0, P=0.0, L=1.0, grad_norm=0.1)] * 10
    L, D = 20.0, 3200
    v = np.ones(D + 1)
    prof = shock_profile(L, D).with_values(v)
    out = classify_outcome(history, prof, QuarticPotential(0.1))
    assert out == "collapsed_to_constant"


def test_lambda_history_tracks_accepted_steps(front_005):
    res = front_005["result"]
    assert len(res.lambda_history) == len(res.history)
    assert all(0 < lam <= 0.5 for lam in res.lambda_history)


def test_constraint_set_entry_and_invariance(front_005, front_03):
    # Lemma-style invariance: once an iterate satisfies the sup-norm and
    # Lipschitz bounds, all later iterates do too; the shock initial datum
    # itself has quotient 1/h and needs a short smoothing transient.
    for fx in (front_005, front_03):
        gamma = fx["gamma"]
        sups = np.array(fx["sups"])
        quots = np.array(fx["quots"])
        assert np.all(sups <= gamma + 1e-12)
        ok = quots <= 2 * gamma + 1e-9
        entry = int(np.argmax(ok))
        assert entry <= 100
        assert np.all(ok[entry:])

import numpy as np
import pytest
from scipy.integrate import quad

from fpufronts import (
    GridProfile,
    QuarticPotential,
    apply_averaging,
    functional_L,
    functional_N,
    functional_P,
    grad_norm,
    gradient,
    n_identity_check,
    quadratic_M,
    relative_action,
    shock_profile,
)
from fpufronts.errors import NonZeroTails, TailNotConverged

from conftest import compact_perturbation, pinned_tanh_profile


def test_n_of_shock_closed_form():
    # (A W_sh)(phi) = 2 phi on |phi| <= 1/2, so N = (1/2) * int(1 - 4 phi^2) = 1/3.
    # The zero value at the jump node costs h/2, so the oracle needs a fine mesh.
    sh = shock_profile(2.5, 50_000)
    assert abs(functional_N(sh) - 1 / 3) < 1e-4


def test_p_of_shock_quadrature_oracle():
    beta = 0.05
    pot = QuarticPotential(beta)
    # independent oracle: psi(2 phi) integrated over the ramp
    oracle, _ = quad(lambda p: beta * ((2 * p) ** 2 - 1) ** 2, -0.5, 0.5)
    assert oracle == pytest.approx(8 * beta / 15, abs=1e-12)
    sh = shock_profile(2.5, 50_000)
    assert abs(functional_P(sh, pot) - oracle) < 1e-6


def test_functionals_require_exact_tails():
    sh = shock_profile(20.0, 3200)
    v = sh.values.copy()
    v[3] = -0.999
    with pytest.raises(TailNotConverged):
        functional_N(sh.with_values(v))


def test_quadratic_m_nonnegative():
    rng = np.random.default_rng(23)
    for _ in range(50):
        d = compact_perturbation(rng, scale=0.5)
        assert quadratic_M(d) >= -1e-12


def test_quadratic_m_rejects_nonzero_tails():
    d = GridProfile(20.0, 3200, np.ones(3201), left_value=0.0, right_value=0.0)
    with pytest.raises(NonZeroTails):
        quadratic_M(d)


def test_decomposition_identity_exact():
    rng = np.random.default_rng(29)
    for _ in range(30):
        w1 = pinned_tanh_profile(rng)
        d = compact_perturbation(rng, scale=0.3)
        w2 = w1.with_values(w1.values + d.values)
        assert n_identity_check(w1, w2) < 1e-10


def test_integer_shift_invariance():
    sh = shock_profile(20.0, 3200)
    pot = QuarticPotential(0.1)
    k2 = 2 * sh.K  # one full phase unit
    shifted = sh.with_values(np.concatenate([np.full(k2, -1.0), sh.values[:-k2]]))
    assert abs(functional_L(shifted, pot) - functional_L(sh, pot)) < 1e-10


def test_gradient_support_of_shock():
    # residual of the shock is confined to one window width around the jump
    sh = shock_profile(20.0, 3200)
    pot = QuarticPotential(0.05)
    g = gradient(sh, pot)
    nodes = sh.nodes
    outside = np.abs(nodes) > 1.0 + sh.h
    assert np.max(np.abs(g.values[outside])) < 1e-14


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(31)
    eps = 1e-5
    for beta in (0.05, 0.3):
        pot = QuarticPotential(beta)
        for _ in range(5):
            w = pinned_tanh_profile(rng)
            d = compact_perturbation(rng, scale=0.2)
            g = gradient(w, pot)
            directional = float(np.sum(g.values * d.values) * w.h)
            plus = functional_L(w.with_values(w.values + eps * d.values), pot)
            minus = functional_L(w.with_values(w.values - eps * d.values), pot)
            fd = (plus - minus) / (2 * eps)
            assert fd == pytest.approx(directional, rel=1e-5, abs=1e-12)


def test_gradient_norm_scaling():
    d = compact_perturbation(np.random.default_rng(37), scale=0.4)
    assert grad_norm(d) == pytest.approx(np.sqrt(d.h * np.sum(d.values**2)), abs=1e-14)


def test_relative_action_of_reference_is_zero():
    sh = shock_profile(20.0, 3200)
    pot = QuarticPotential(0.2)
    assert relative_action(sh, pot, sh) == 0.0


def test_action_drops_from_shock_to_front():
    # averaging the transition always pays in N, and the quartic front exists
    rng = np.random.default_rng(41)
    sh = shock_profile(20.0, 3200)
    pot = QuarticPotential(0.05)
    w = pinned_tanh_profile(rng, n_bumps=0)
    assert functional_L(w, pot) < functional_L(sh, pot) + 1.0


def test_averaged_profile_tails_are_exact():
    rng = np.random.default_rng(43)
    w = pinned_tanh_profile(rng)
    u = apply_averaging(w)
    k = w.K
    assert np.all(u.values[:k] == -1.0)
    assert np.all(u.values[-k:] == 1.0)

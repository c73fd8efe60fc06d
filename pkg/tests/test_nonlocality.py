import numpy as np
import pytest

from spinsim import (
    ObservableAngles,
    SchmidtState,
    cabello3_max,
    cabello3_objective,
    cabello_constraints,
    cabello_max,
    cabello_objective,
    cabello_probs,
    cabello_probs_oracle,
    hardy_max,
    hardy_objective,
    success_curve,
)
from spinsim.nonlocality import solved_angles


def random_angles(rng):
    return ObservableAngles(
        theta_f=rng.uniform(0, np.pi), phi_f=rng.uniform(0, 2 * np.pi),
        theta_d=rng.uniform(0, np.pi), phi_d=rng.uniform(0, 2 * np.pi),
        theta_g=rng.uniform(0, np.pi), phi_g=rng.uniform(0, 2 * np.pi),
        theta_e=rng.uniform(0, np.pi), phi_e=rng.uniform(0, 2 * np.pi),
    )


def test_probs_match_state_vector_oracle():
    rng = np.random.default_rng(0)
    for _ in range(100):
        state = SchmidtState(rng.uniform(0.05, np.pi / 2 - 0.05),
                             rng.uniform(0, 2 * np.pi))
        angles = random_angles(rng)
        closed = cabello_probs(state, angles)
        oracle = cabello_probs_oracle(state, angles)
        for c, o in zip(closed, oracle):
            assert 0.0 - 1e-12 <= c <= 1.0 + 1e-12
            assert c == pytest.approx(o, abs=1e-10)


def test_constraint_angles():
    state = SchmidtState(np.pi / 4)
    assert cabello_constraints(state, 0.7) == pytest.approx(0.7)  # tan(beta) = 1
    assert cabello_constraints(state, 0.0) == 0.0
    assert cabello_constraints(state, np.pi) == np.pi
    skew = SchmidtState(np.arctan(2.0))
    theta_e = 0.9
    theta_f = cabello_constraints(skew, theta_e)
    assert np.tan(theta_f / 2) == pytest.approx(2 * np.tan(theta_e / 2), abs=1e-12)


def test_solved_angles_zero_the_constrained_probs():
    rng = np.random.default_rng(2)
    for _ in range(25):
        state = SchmidtState(rng.uniform(0.1, np.pi / 2 - 0.1),
                             rng.uniform(0, 2 * np.pi))
        angles = solved_angles(state, rng.uniform(0.05, np.pi - 0.05),
                               rng.uniform(0.05, np.pi - 0.05))
        q1, q2, q3, q4 = cabello_probs(state, angles)
        assert abs(q2) < 1e-12
        assert abs(q3) < 1e-12
        # the reduced objective equals q4 - q1 at those angles
        assert q4 - q1 == pytest.approx(
            cabello_objective(state, angles.theta_d, angles.theta_e), abs=1e-10)


def test_cabello_objective_vanishes_at_maximal_entanglement():
    state = SchmidtState(np.pi / 4)
    rng = np.random.default_rng(3)
    for _ in range(50):
        od = cabello_objective(state, rng.uniform(0, np.pi), rng.uniform(0, np.pi))
        assert od == pytest.approx(0.0, abs=1e-12)


def test_cabello_maximum():
    result = cabello_max(SchmidtState(np.arccos(0.4811)))
    assert result.value == pytest.approx(0.1078, abs=2e-4)
    assert result.argmax[0] == pytest.approx(result.argmax[1], abs=1e-4)
    assert result.argmax[0] == pytest.approx(0.595, abs=5e-3)


def test_cabello3_degenerates_to_two_probability_form():
    # when theta_G solves the q2 = 0 constraint (mirrored branch),
    # the three-probability objective collapses to q4' - q1' with q2' = 0
    state = SchmidtState(1.1)
    rng = np.random.default_rng(4)
    for _ in range(20):
        theta_d = rng.uniform(0.1, np.pi - 0.1)
        theta_e = rng.uniform(0.1, np.pi - 0.1)
        theta_g = -cabello_constraints(state, theta_d)
        three = cabello3_objective(state, theta_d, theta_e, theta_g)
        angles = solved_angles(state, theta_d, theta_e, phase_sign=+1.0)
        q1, q2, q3, q4 = cabello_probs(state, angles)
        assert three == pytest.approx(q4 - q1, abs=1e-10)


def test_cabello3_maximum_value_and_location():
    best = cabello3_max(SchmidtState(0.9471))
    assert best.value == pytest.approx(0.15883, abs=2e-4)
    sorted_thetas = np.sort(best.argmax)
    assert sorted_thetas[0] == pytest.approx(0.455, abs=5e-3)
    assert sorted_thetas[2] == pytest.approx(1.407, abs=5e-3)


def test_cabello3_positive_even_at_maximal_entanglement():
    # unlike the two-probability argument, relaxing q2 = 0 leaves a
    # genuine gap of 1/8 at beta = pi/4
    best = cabello3_max(SchmidtState(np.pi / 4))
    assert best.value == pytest.approx(0.125, abs=1e-4)


def test_hardy_constraints_and_maximum():
    state = SchmidtState(np.arctan(1 / 0.4643))
    best = hardy_max(state)
    golden = (5 * np.sqrt(5) - 11) / 2
    assert best.value == pytest.approx(golden, abs=2e-4)
    # all four probabilities at the solved configuration: q1=q2=q3=0
    theta_d = float(best.argmax[0])
    value = hardy_objective(state, theta_d)
    assert value == pytest.approx(best.value, abs=1e-10)


def test_hardy_infeasible_for_maximal_entanglement():
    best = hardy_max(SchmidtState(np.pi / 4))
    assert not best.feasible
    assert best.value == 0.0
    # the constrained q4 vanishes identically there
    state = SchmidtState(np.pi / 4)
    for theta in np.linspace(0.1, np.pi - 0.1, 15):
        assert hardy_objective(state, theta) == pytest.approx(0.0, abs=1e-12)


def test_hardy_product_state_limit():
    # nearly-product states give vanishing success probability
    state = SchmidtState(0.02)
    assert hardy_max(state).value < 1e-3


def test_monotone_dominance_across_arguments():
    # the three-probability relaxation can only widen the gap, and the
    # Hardy constraint set can only narrow it
    for cb in np.linspace(0.05, 0.98, 50):
        state = SchmidtState(float(np.arccos(cb)))
        hardy = hardy_max(state, grid_points=32, multi_start=2).value
        two = cabello_max(state, grid_points=12, multi_start=2).value
        three = cabello3_max(state, grid_points=8, multi_start=2).value
        assert two >= hardy - 1e-4
        assert three >= two - 1e-4


def test_gamma_shift_absorbed_by_phases():
    rng = np.random.default_rng(6)
    for _ in range(10):
        beta = rng.uniform(0.2, np.pi / 2 - 0.2)
        td, te = rng.uniform(0.1, np.pi - 0.1, 2)
        values = set()
        for gamma in (0.0, 1.1, 4.4):
            state = SchmidtState(beta, gamma)
            values.add(round(cabello_objective(state, td, te), 12))
        assert len(values) == 1


def test_success_curve_edges():
    rows = success_curve([1.0, np.sqrt(2) / 2])
    assert rows[0]["hardy_max"] == 0.0
    assert rows[0]["cabello_max"] == 0.0
    assert rows[0]["cabello3_max"] == 0.0
    # maximally entangled: Hardy and two-probability Cabello vanish
    assert rows[1]["hardy_max"] == 0.0
    assert rows[1]["cabello_max"] == pytest.approx(0.0, abs=1e-9)

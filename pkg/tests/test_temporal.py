import numpy as np
import pytest

from spinsim import (
    InitialState,
    RandomStream,
    Spin,
    empirical_mutual_information,
    qubit_corr_lastk,
    sample_unit_sphere,
    temporal_ensemble,
    temporal_moment,
    temporal_round,
    unit_from_angles,
)
from spinsim.errors import ResourceMismatchError

Z = np.array([0.0, 0.0, 1.0])


def random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def test_round_requires_2n_plus_1_vectors():
    shared = [Z] * 4
    with pytest.raises(ResourceMismatchError):
        temporal_round(Z, [Z, Z], shared)


def test_outputs_are_signs():
    stream = RandomStream(3)
    shared = [sample_unit_sphere(stream, 100) for _ in range(7)]
    rng = np.random.default_rng(0)
    rounds = temporal_round(Z, [random_unit(rng) for _ in range(3)], shared)
    assert len(rounds.outputs) == 3
    assert len(rounds.transcripts) == 2
    for out in rounds.outputs:
        assert set(np.unique(out)) <= {-1.0, 1.0}


def test_first_step_identities():
    rng = np.random.default_rng(1)
    a1, a2 = random_unit(rng), random_unit(rng)
    n = 1_000_000
    rounds = temporal_ensemble(Z, [a1, a2], n, seed=42)
    m1, se1 = temporal_moment(rounds, [1])
    assert abs(m1 - Z @ a1) < 4 * se1
    m2, se2 = temporal_moment(rounds, [2])
    assert abs(m2 - (Z @ a1) * (a1 @ a2)) < 4 * se2
    m12, se12 = temporal_moment(rounds, [1, 2])
    assert abs(m12 - a1 @ a2) < 4 * se12


def test_moments_match_qubit_closed_forms_n4():
    rng = np.random.default_rng(7)
    dirs = [random_unit(rng) for _ in range(4)]
    state = InitialState.pure(Spin(1), Z)
    rounds = temporal_ensemble(Z, dirs, 400_000, seed=11)
    for k in range(4):
        mean, se = temporal_moment(rounds, range(4 - k, 5))
        exact = qubit_corr_lastk(state, dirs, k)
        assert abs(mean - exact) < 4 * max(se, 1e-12)


def test_perpendicular_preparation_kills_odd_moments():
    a1 = unit_from_angles(np.pi / 2)  # perpendicular to a0 = z
    rng = np.random.default_rng(9)
    dirs = [a1] + [random_unit(rng) for _ in range(2)]
    rounds = temporal_ensemble(Z, dirs, 400_000, seed=5)
    m, se = temporal_moment(rounds, [1, 2, 3])
    assert abs(m) < 4 * se
    m1, se1 = temporal_moment(rounds, [1])
    assert abs(m1) < 4 * se1


def test_mixed_preparation_scales_first_moment():
    rng = np.random.default_rng(10)
    a1 = random_unit(rng)
    weights = (0.8, 0.2)
    rounds = temporal_ensemble(Z, [a1], 400_000, seed=6, initial_weights=weights)
    m, se = temporal_moment(rounds, [1])
    assert abs(m - 0.6 * (Z @ a1)) < 4 * se


def test_transcript_privacy():
    rng = np.random.default_rng(12)
    dirs = [random_unit(rng) for _ in range(3)]
    rounds = temporal_ensemble(Z, dirs, 1_000_000, seed=13)
    for i, (c_odd, c_even) in enumerate(rounds.transcripts):
        pair_symbol = (c_odd > 0).astype(int) * 2 + (c_even > 0).astype(int)
        prior = rounds.outputs[i]  # the output that produced this pair
        assert empirical_mutual_information(pair_symbol, prior) < 1e-3


def test_moment_index_validation():
    rounds = temporal_ensemble(Z, [Z, Z], 1000, seed=1)
    with pytest.raises(ValueError):
        temporal_moment(rounds, [0])
    with pytest.raises(ValueError):
        temporal_moment(rounds, [3])

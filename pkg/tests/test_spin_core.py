import numpy as np
import pytest

from spinsim import (
    Spin,
    eigenbasis,
    singlet_correlation_closed_form,
    singlet_correlation_exact,
    singlet_state,
    spin_component,
    spin_matrices,
    transition_matrix,
    transition_prob,
    unit_from_angles,
)
from spinsim.errors import EigenvalueError, NormalizationError

SPINS = [Spin(k) for k in range(1, 13)]  # s = 1/2 .. 6


def random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def test_spin_of_accepts_fraction_strings():
    assert Spin.of("5/2").twice_s == 5
    assert Spin.of(1.5).twice_s == 3
    assert Spin.of(Spin(4)) == Spin(4)
    with pytest.raises(ValueError):
        Spin.of(0.3)
    with pytest.raises(ValueError):
        Spin(0)


def test_ladder_and_index():
    spin = Spin.of("3/2")
    assert np.allclose(spin.ladder(), [1.5, 0.5, -0.5, -1.5])
    assert spin.index_of(-0.5) == 2
    with pytest.raises(EigenvalueError):
        spin.index_of(0.0)
    with pytest.raises(EigenvalueError):
        spin.index_of(2.5)


def test_sz_diagonal_and_pauli_half():
    sx, sy, sz = spin_matrices(Spin(1))
    assert np.allclose(sz, np.diag([0.5, -0.5]))
    assert np.allclose(sx, 0.5 * np.array([[0, 1], [1, 0]]))


def test_spin1_sx_spectrum():
    sx, _, _ = spin_matrices(Spin(2))
    eigs = np.sort(np.linalg.eigvalsh(sx))
    assert np.allclose(eigs, [-1, 0, 1], atol=1e-12)


@pytest.mark.parametrize("spin", SPINS)
def test_commutator_and_casimir(spin):
    sx, sy, sz = spin_matrices(spin)
    s = spin.s
    assert np.allclose(sx @ sy - sy @ sx, 1j * sz, atol=1e-10)
    assert np.allclose(sy @ sz - sz @ sy, 1j * sx, atol=1e-10)
    casimir = sx @ sx + sy @ sy + sz @ sz
    assert np.allclose(casimir, s * (s + 1) * np.eye(spin.d), atol=1e-10)
    for m in (sx, sy, sz):
        assert np.allclose(m, m.conj().T, atol=1e-12)


def test_casimir_value_three_half():
    sx, sy, sz = spin_matrices(Spin(3))
    total = sx @ sx + sy @ sy + sz @ sz
    assert np.allclose(total, (15 / 4) * np.eye(4), atol=1e-10)


def test_spin_component_requires_unit():
    with pytest.raises(NormalizationError):
        spin_component(Spin(1), [1.0, 1.0, 0.0])


def test_spin_component_trace_identity():
    rng = np.random.default_rng(3)
    for spin in (Spin(1), Spin(4), Spin(7)):
        a = random_unit(rng)
        op = spin_component(spin, a)
        s = spin.s
        assert np.trace(op @ op).real == pytest.approx(s * (s + 1) * spin.d / 3, abs=1e-10)


def test_eigenbasis_z_axis():
    basis = eigenbasis(Spin(1), [0, 0, 1])
    assert np.allclose(basis.eigenvalues, [0.5, -0.5])
    assert np.allclose(basis.eigenvectors, np.eye(2), atol=1e-12)


def test_eigenbasis_spectrum_direction_independent():
    rng = np.random.default_rng(5)
    for spin in (Spin(2), Spin(5)):
        for _ in range(5):
            basis = eigenbasis(spin, random_unit(rng))
            assert np.allclose(basis.eigenvalues, spin.ladder(), atol=1e-10)


def test_eigenbasis_satisfies_eigenequation_and_phase():
    rng = np.random.default_rng(6)
    spin = Spin(3)
    a = random_unit(rng)
    op = spin_component(spin, a)
    basis = eigenbasis(spin, a)
    for k, m in enumerate(basis.eigenvalues):
        v = basis.eigenvectors[:, k]
        assert np.allclose(op @ v, m * v, atol=1e-10)
        first = v[np.argmax(np.abs(v) > 1e-8)]
        assert first.imag == pytest.approx(0.0, abs=1e-12)
        assert first.real > 0
    # orthonormal
    gram = basis.eigenvectors.conj().T @ basis.eigenvectors
    assert np.allclose(gram, np.eye(spin.d), atol=1e-10)


def test_spin1_sx_zero_eigenvector():
    basis = eigenbasis(Spin(2), [1, 0, 0])
    v = basis.eigenvectors[:, 1]  # eigenvalue 0
    expected = np.array([1, 0, -1]) / np.sqrt(2)
    assert np.allclose(np.abs(v), np.abs(expected), atol=1e-10)


def test_transition_prob_known_values():
    assert transition_prob(Spin(1), [0, 0, 1], 0.5, [0, 0, 1], 0.5) == pytest.approx(1.0)
    # orthogonal directions on a qubit: every outcome pair has p = 1/2
    for ma in (0.5, -0.5):
        for mb in (0.5, -0.5):
            p = transition_prob(Spin(1), [0, 0, 1], ma, [1, 0, 0], mb)
            assert p == pytest.approx(0.5, abs=1e-12)


def test_transition_prob_qubit_closed_form():
    rng = np.random.default_rng(11)
    for _ in range(10):
        a, b = random_unit(rng), random_unit(rng)
        for ma in (0.5, -0.5):
            for mb in (0.5, -0.5):
                expected = (1 + 4 * ma * mb * (a @ b)) / 2
                assert transition_prob(Spin(1), a, ma, b, mb) == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize("spin", [Spin(1), Spin(2), Spin(3), Spin(6)])
def test_transition_matrix_doubly_stochastic(spin):
    rng = np.random.default_rng(spin.twice_s)
    for _ in range(5):
        T = transition_matrix(spin, random_unit(rng), random_unit(rng))
        assert np.allclose(T.sum(axis=0), 1.0, atol=1e-9)
        assert np.allclose(T.sum(axis=1), 1.0, atol=1e-9)
        assert np.all(T >= -1e-12)


def test_singlet_state_half():
    psi = singlet_state(Spin(1))
    expected = np.array([0, 1, -1, 0]) / np.sqrt(2)
    # match up to a global phase
    k = np.argmax(np.abs(psi))
    assert np.allclose(psi / psi[k] * expected[k], expected, atol=1e-12)


@pytest.mark.parametrize("spin", [Spin(1), Spin(2), Spin(3), Spin(4)])
def test_singlet_invariants(spin):
    rng = np.random.default_rng(spin.twice_s + 100)
    psi = singlet_state(spin)
    assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-12)
    d = spin.d
    # total spin component along any axis annihilates the state
    n = random_unit(rng)
    op = spin_component(spin, n)
    total = np.kron(op, np.eye(d)) + np.kron(np.eye(d), op)
    assert np.linalg.norm(total @ psi) == pytest.approx(0.0, abs=1e-10)
    # both reduced density matrices are maximally mixed
    mat = psi.reshape(d, d)
    rho_a = mat @ mat.conj().T
    assert np.allclose(rho_a, np.eye(d) / d, atol=1e-12)


def test_singlet_correlation_examples():
    z = np.array([0.0, 0.0, 1.0])
    x = np.array([1.0, 0.0, 0.0])
    assert singlet_correlation_exact(Spin(1), z, z) == pytest.approx(-0.25, abs=1e-12)
    assert singlet_correlation_exact(Spin(3), z, x) == pytest.approx(0.0, abs=1e-12)
    assert singlet_correlation_exact(Spin(4), z, -z) == pytest.approx(2.0, abs=1e-10)


def test_singlet_correlation_matches_closed_form():
    rng = np.random.default_rng(17)
    for twice_s in range(1, 9):  # s = 1/2 .. 4
        spin = Spin(twice_s)
        for _ in range(20):
            a, b = random_unit(rng), random_unit(rng)
            exact = singlet_correlation_exact(spin, a, b)
            closed = singlet_correlation_closed_form(spin, a, b)
            assert exact == pytest.approx(closed, abs=1e-9)


def test_unit_from_angles():
    v = unit_from_angles(np.pi / 2, 0.0)
    assert np.allclose(v, [1, 0, 0], atol=1e-12)
    assert np.allclose(unit_from_angles(0.0), [0, 0, 1], atol=1e-12)

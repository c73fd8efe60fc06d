"""Exact quantum-mechanical kernel for spin-s systems.

Spin operator matrices, eigenbases of spin components, transition
probabilities between successive Stern-Gerlach outcomes, the two-spin
singlet state, and the closed-form singlet correlation, all as dense
numpy arrays.  Dimensions stay tiny (d = 2s+1), so clarity wins over
sparsity throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import EigenvalueError, NormalizationError

UNIT_TOL = 1e-12


@dataclass(frozen=True, order=True)
class Spin:
    """A spin quantum number, stored exactly as the integer 2s."""

    twice_s: int

    def __post_init__(self):
        if self.twice_s < 1:
            raise ValueError(f"spin must be >= 1/2, got 2s = {self.twice_s}")

    @classmethod
    def of(cls, s) -> "Spin":
        """Build from an int, float, Fraction, or string such as '5/2'."""
        if isinstance(s, Spin):
            return s
        frac = Fraction(s)
        twice = frac * 2
        if twice.denominator != 1:
            raise ValueError(f"spin must be an integer or half-integer, got {s}")
        return cls(int(twice))

    @property
    def s(self) -> float:
        return self.twice_s / 2.0

    @property
    def d(self) -> int:
        """Hilbert-space dimension 2s + 1."""
        return self.twice_s + 1

    @property
    def is_integer(self) -> bool:
        return self.twice_s % 2 == 0

    def ladder(self) -> np.ndarray:
        """Eigenvalues s, s-1, ..., -s in descending order."""
        return (self.twice_s - 2 * np.arange(self.d)) / 2.0

    def index_of(self, m: float) -> int:
        """Row index of eigenvalue m in the descending ladder."""
        twice_m = round(2 * m)
        if abs(2 * m - twice_m) > 1e-9 or abs(twice_m) > self.twice_s \
                or (self.twice_s - twice_m) % 2 != 0:
            raise EigenvalueError(f"{m} is not an eigenvalue for s = {self}")
        return (self.twice_s - twice_m) // 2

    def __str__(self):
        return str(Fraction(self.twice_s, 2))


def normalize(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(norm == 0):
        raise NormalizationError("zero vector cannot be normalized")
    return v / norm


def require_unit(v, tol: float = UNIT_TOL) -> np.ndarray:
    """Validate that v lies on the unit sphere (within tol on the norm squared)."""
    v = np.asarray(v, dtype=float)
    if v.shape[-1] != 3:
        raise NormalizationError(f"expected 3-vectors, got shape {v.shape}")
    err = np.abs(np.sum(v * v, axis=-1) - 1.0)
    if np.any(err > tol * 10):
        raise NormalizationError(f"vector not normalized (|v|^2 - 1 = {float(np.max(err)):.3e})")
    return v


def unit_from_angles(theta: float, phi: float = 0.0) -> np.ndarray:
    """Unit vector with polar angle theta and azimuth phi."""
    st = np.sin(theta)
    return np.array([st * np.cos(phi), st * np.sin(phi), np.cos(theta)])


def spin_matrices(spin: Spin) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Matrices (Sx, Sy, Sz) in the Sz eigenbasis, hbar = 1.

    Built from the ladder operator S+ with the standard matrix elements
    sqrt(s(s+1) - m(m+1)); Sz is diagonal with entries s ... -s.
    """
    spin = Spin.of(spin)
    s = spin.s
    m = spin.ladder()
    sz = np.diag(m).astype(complex)
    sp = np.zeros((spin.d, spin.d))
    for i in range(spin.d - 1):
        k = m[i + 1]
        sp[i, i + 1] = np.sqrt(s * (s + 1) - k * (k + 1))
    sm = sp.T
    sx = (0.5 * (sp + sm)).astype(complex)
    sy = -0.5j * (sp - sm)
    return sx, sy, sz


def spin_component(spin: Spin, a) -> np.ndarray:
    """The observable a . S for a unit vector a."""
    a = require_unit(a)
    sx, sy, sz = spin_matrices(spin)
    return a[0] * sx + a[1] * sy + a[2] * sz


@dataclass(frozen=True)
class SpinEigenbasis:
    """Eigenpairs of a . S, sorted by descending eigenvalue.

    Phase convention: in each eigenvector the first component of
    magnitude above 1e-8 (scanning from the m = s basis row) is made
    real and positive, so bases are reproducible across runs.
    """

    direction: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # column k belongs to eigenvalues[k]


def eigenbasis(spin: Spin, a) -> SpinEigenbasis:
    spin = Spin.of(spin)
    op = spin_component(spin, a)
    w, v = np.linalg.eigh(op)
    order = np.argsort(-w)
    w = w[order]
    v = v[:, order]
    for k in range(spin.d):
        col = v[:, k]
        idx = np.argmax(np.abs(col) > 1e-8)
        phase = col[idx] / abs(col[idx])
        v[:, k] = col / phase
    return SpinEigenbasis(np.asarray(a, float), w, v)


def transition_matrix(spin: Spin, a, b) -> np.ndarray:
    """T[i, j] = |<a, m_i | b, m_j>|^2 over the descending ladders.

    These are the single-step probabilities of the Markov chain formed
    by successive Stern-Gerlach measurements; every row and column sums
    to one.
    """
    ba = eigenbasis(spin, a)
    bb = eigenbasis(spin, b)
    overlaps = ba.eigenvectors.conj().T @ bb.eigenvectors
    return np.abs(overlaps) ** 2


def transition_prob(spin: Spin, a, m_a: float, b, m_b: float) -> float:
    """|<a, m_a | b, m_b>|^2 for single eigenvalues m_a, m_b."""
    spin = Spin.of(spin)
    i = spin.index_of(m_a)
    j = spin.index_of(m_b)
    return float(transition_matrix(spin, a, b)[i, j])


def singlet_state(spin: Spin) -> np.ndarray:
    """Amplitude vector of the two spin-s singlet, |m> (x) |-m> ordering.

    Components are (-1)^(s-m) / sqrt(2s+1) on the antiparallel pairs and
    zero elsewhere; the state is annihilated by every total spin
    component.
    """
    spin = Spin.of(spin)
    d = spin.d
    psi = np.zeros(d * d, dtype=complex)
    norm = 1.0 / np.sqrt(d)
    for i in range(d):
        # ladder index i has m = s - i, so s - m = i
        j = d - 1 - i
        psi[i * d + j] = (-1) ** i * norm
    return psi


def singlet_correlation_exact(spin: Spin, a, b) -> float:
    """<psi | (a.S) (x) (b.S) | psi> by explicit matrix contraction."""
    spin = Spin.of(spin)
    d = spin.d
    op_a = spin_component(spin, a)
    op_b = spin_component(spin, b)
    psi = singlet_state(spin).reshape(d, d)
    value = np.einsum("ij,ik,jl,kl->", psi.conj(), op_a, op_b, psi)
    if abs(value.imag) > 1e-10:
        raise RuntimeError(f"correlation came out complex: {value}")
    return float(value.real)


def singlet_correlation_closed_form(spin: Spin, a, b) -> float:
    """-(1/3) s (s+1) a.b, the closed form of the singlet correlation."""
    spin = Spin.of(spin)
    a = require_unit(a)
    b = require_unit(b)
    s = spin.s
    return -s * (s + 1) / 3.0 * float(a @ b)

"""Seeded random sources for the classical protocols.

Uniform unit vectors on the sphere, the sgn convention with
sgn(0) = +1, and the biased sign variable used by the integer-spin
branches of the recursive singlet protocol.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SpinsimError


class RandomStream:
    """A reproducible PCG64 stream addressed by (seed, stream_id).

    Identical (seed, stream_id) pairs reproduce identical draw
    sequences; distinct stream_ids give statistically independent
    streams, which is what makes chunked Monte Carlo deterministic
    regardless of worker count.  A stream is single-owner mutable
    state: share seeds, not stream objects, across workers.
    """

    def __init__(self, seed: int, stream_id: int = 0):
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id,))
        self._gen = np.random.Generator(np.random.PCG64(ss))

    def uniform(self, low: float, high: float, size=None) -> np.ndarray:
        return self._gen.uniform(low, high, size)

    def __repr__(self):
        return f"RandomStream(seed={self.seed}, stream_id={self.stream_id})"


def sample_unit_sphere(stream: RandomStream, size: int | None = None) -> np.ndarray:
    """Uniform point(s) on S^2: z uniform on [-1, 1], azimuth uniform.

    Returns shape (3,) for size=None, else (size, 3).
    """
    n = 1 if size is None else size
    z = stream.uniform(-1.0, 1.0, n)
    phi = stream.uniform(0.0, 2.0 * np.pi, n)
    rho = np.sqrt(1.0 - z * z)
    vecs = np.stack([rho * np.cos(phi), rho * np.sin(phi), z], axis=-1)
    return vecs[0] if size is None else vecs


def sgn(x):
    """+1 for x >= 0, -1 for x < 0 (note sgn(0) = +1), elementwise."""
    return np.where(np.asarray(x) >= 0, 1.0, -1.0)


def biased_sign(nu, p: float):
    """sgn(z . nu + p): over uniform nu this is +1 with probability (1+p)/2."""
    if not 0.0 < p < 1.0:
        raise SpinsimError(f"bias parameter must lie in (0, 1), got {p}")
    nu = np.asarray(nu, dtype=float)
    return sgn(nu[..., 2] + p)


@dataclass
class SharedRandomness:
    """An ordered bundle of shared unit vectors for one protocol round.

    Each entry may be a single (3,) vector or a batch (n, 3); the
    protocol arithmetic broadcasts over leading axes, so the same
    bundle type drives one round or a vectorized ensemble.
    """

    lambdas: list = field(default_factory=list)
    mus: list = field(default_factory=list)
    nus: list = field(default_factory=list)

    def counts(self) -> tuple[int, int, int]:
        return len(self.lambdas), len(self.mus), len(self.nus)


def draw_shared_randomness(n_lambda: int, n_mu: int, n_nu: int,
                           stream: RandomStream, size: int | None = None) -> SharedRandomness:
    """Draw a bundle in a fixed order (all lambdas, all mus, all nus)."""
    return SharedRandomness(
        lambdas=[sample_unit_sphere(stream, size) for _ in range(n_lambda)],
        mus=[sample_unit_sphere(stream, size) for _ in range(n_mu)],
        nus=[sample_unit_sphere(stream, size) for _ in range(n_nu)],
    )

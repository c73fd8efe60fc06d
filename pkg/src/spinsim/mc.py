"""Monte Carlo estimation harness for the protocol rounds.

Rounds are generated in fixed-size chunks, one independent random
stream per chunk, so an estimate is bit-identical for any worker count
and any chunking of the same seed.  Chunk partial sums are reduced with
math.fsum, which keeps 10^7-round accumulations exact.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from .errors import DegenerateComparisonError, InsufficientDataError, ResourceMismatchError
from .protocols import (
    BinaryRecursive,
    NonMaxEntangled,
    PAdicComposite,
    ProtocolKind,
    TonerBacon,
    run_round,
)
from .randomness import RandomStream, draw_shared_randomness
from .spin_core import Spin, require_unit, singlet_correlation_closed_form

CHUNK_SIZE = 1 << 17


@dataclass
class CorrelationEstimate:
    """Sample moments of one protocol ensemble, with standard errors."""

    mean_alpha: float
    mean_beta: float
    mean_alphabeta: float
    stderr_alpha: float
    stderr_beta: float
    stderr_alphabeta: float
    n_rounds: int
    outcome_values: np.ndarray
    marginal_hist_alpha: np.ndarray
    marginal_hist_beta: np.ndarray

    def to_dict(self) -> dict:
        return {
            "mean_alpha": self.mean_alpha,
            "mean_beta": self.mean_beta,
            "mean_alphabeta": self.mean_alphabeta,
            "stderr_alpha": self.stderr_alpha,
            "stderr_beta": self.stderr_beta,
            "stderr_alphabeta": self.stderr_alphabeta,
            "n_rounds": self.n_rounds,
            "outcome_values": [float(v) for v in self.outcome_values],
            "marginal_hist_alpha": [int(c) for c in self.marginal_hist_alpha],
            "marginal_hist_beta": [int(c) for c in self.marginal_hist_beta],
        }


@dataclass
class OracleComparison:
    """A z-score test of an estimate against an exact value."""

    quantity: str
    exact_value: float
    estimate_value: float
    stderr: float
    z_score: float
    threshold: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "exact_value": self.exact_value,
            "estimate_value": self.estimate_value,
            "stderr": self.stderr,
            "z_score": self.z_score,
            "threshold": self.threshold,
            "passed": self.passed,
        }


def _draw_for(protocol: ProtocolKind, stream: RandomStream, size: int):
    if isinstance(protocol, PAdicComposite):
        res = BinaryRecursive(Spin(protocol.P - 1)).resources()
        return [
            draw_shared_randomness(res.n_lambda, res.n_mu, res.n_nu, stream, size)
            for _ in range(protocol.n)
        ]
    res = protocol.resources()
    return draw_shared_randomness(res.n_lambda, res.n_mu, res.n_nu, stream, size)


def _chunk_stats(protocol, a, b, seed, chunk_id, size):
    stream = RandomStream(seed, stream_id=chunk_id)
    shared = _draw_for(protocol, stream, size)
    out = run_round(protocol, a, b, shared)
    al, be = out.alpha, out.beta
    ab = al * be
    ladder = protocol.spin.ladder()
    # outcomes are exact half-integers, so 2*alpha rounds losslessly
    idx_a = ((protocol.spin.twice_s - np.rint(2 * al)) / 2).astype(int)
    idx_b = ((protocol.spin.twice_s - np.rint(2 * be)) / 2).astype(int)
    hist_a = np.bincount(idx_a, minlength=ladder.size)
    hist_b = np.bincount(idx_b, minlength=ladder.size)
    sums = [float(np.sum(x)) for x in (al, be, ab)]
    sqsums = [float(np.sum(x * x)) for x in (al, be, ab)]
    return sums, sqsums, hist_a, hist_b


def estimate(protocol: ProtocolKind, spin: Spin, a, b, n_rounds: int,
             seed: int, workers: int | None = None) -> CorrelationEstimate:
    """Unbiased sample moments over n_rounds protocol rounds.

    Deterministic given (protocol, spin, a, b, n_rounds, seed): the
    round stream is partitioned into chunks with per-chunk stream ids,
    so the result does not depend on `workers`.
    """
    spin = Spin.of(spin)
    if spin != protocol.spin:
        raise ResourceMismatchError(
            f"protocol {protocol} simulates s = {protocol.spin}, not s = {spin}")
    if n_rounds < 1:
        raise ValueError("n_rounds must be positive")
    a = require_unit(np.asarray(a, float))
    b = require_unit(np.asarray(b, float))

    chunks = [(i, min(CHUNK_SIZE, n_rounds - i * CHUNK_SIZE))
              for i in range((n_rounds + CHUNK_SIZE - 1) // CHUNK_SIZE)]
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                lambda c: _chunk_stats(protocol, a, b, seed, c[0], c[1]), chunks))
    else:
        results = [_chunk_stats(protocol, a, b, seed, cid, size) for cid, size in chunks]

    ladder = protocol.spin.ladder()
    hist_a = np.zeros(ladder.size, dtype=np.int64)
    hist_b = np.zeros(ladder.size, dtype=np.int64)
    sums = [[], [], []]
    sqsums = [[], [], []]
    for s_part, sq_part, ha, hb in results:
        for k in range(3):
            sums[k].append(s_part[k])
            sqsums[k].append(sq_part[k])
        hist_a += ha
        hist_b += hb

    n = n_rounds
    means, stderrs = [], []
    for k in range(3):
        total = math.fsum(sums[k])
        total_sq = math.fsum(sqsums[k])
        mean = total / n
        var = max(total_sq - n * mean * mean, 0.0) / (n - 1) if n > 1 else 0.0
        means.append(mean)
        stderrs.append(math.sqrt(var / n))
    return CorrelationEstimate(
        mean_alpha=means[0], mean_beta=means[1], mean_alphabeta=means[2],
        stderr_alpha=stderrs[0], stderr_beta=stderrs[1], stderr_alphabeta=stderrs[2],
        n_rounds=n, outcome_values=ladder,
        marginal_hist_alpha=hist_a, marginal_hist_beta=hist_b,
    )


def exact_targets(protocol: ProtocolKind, a, b) -> dict[str, float]:
    """Exact quantum values of the three moments for a protocol."""
    a = require_unit(np.asarray(a, float))
    b = require_unit(np.asarray(b, float))
    if isinstance(protocol, NonMaxEntangled):
        g = protocol.gamma
        return {
            "alpha": float(a[2] * np.cos(2 * g)),
            "beta": 0.0,
            "alphabeta": float(np.sin(2 * g) * (a @ b)),
        }
    return {
        "alpha": 0.0,
        "beta": 0.0,
        "alphabeta": singlet_correlation_closed_form(protocol.spin, a, b),
    }


def compare_to_oracle(est: CorrelationEstimate, exact: float, threshold: float = 4.0,
                      quantity: str = "alphabeta") -> OracleComparison:
    """z = (mean - exact) / stderr; passes when |z| <= threshold."""
    value = getattr(est, f"mean_{quantity}")
    stderr = getattr(est, f"stderr_{quantity}")
    if stderr == 0.0:
        if value != exact:
            raise DegenerateComparisonError(
                f"zero stderr with mean {value} != exact {exact}")
        z = 0.0
    else:
        z = (value - exact) / stderr
    return OracleComparison(
        quantity=quantity, exact_value=float(exact), estimate_value=float(value),
        stderr=float(stderr), z_score=float(z), threshold=float(threshold),
        passed=bool(abs(z) <= threshold),
    )


def uniformity_test(hist) -> float:
    """Chi-square goodness-of-fit p-value against the uniform distribution."""
    hist = np.asarray(hist)
    total = int(hist.sum())
    if total < 100 * hist.size:
        raise InsufficientDataError(
            f"need at least {100 * hist.size} samples for {hist.size} bins, got {total}")
    stat, pvalue = stats.chisquare(hist)
    return float(pvalue)


def empirical_mutual_information(x, y) -> float:
    """Plug-in mutual information (bits) between two discrete samples."""
    x = np.asarray(x)
    y = np.asarray(y)
    xs, xi = np.unique(x, return_inverse=True)
    ys, yi = np.unique(y, return_inverse=True)
    joint = np.zeros((xs.size, ys.size))
    np.add.at(joint, (xi, yi), 1.0)
    joint /= x.size
    px = joint.sum(axis=1, keepdims=True)
    py = joint.sum(axis=0, keepdims=True)
    mask = joint > 0
    return float(np.sum(joint[mask] * np.log2(joint[mask] / (px @ py)[mask])))

"""Classical two-cbit protocol for n successive qubit measurements.

Each experimenter after the first receives two cbits from the previous
one and outputs a +-1 value; with 2n+1 shared unit vectors the ensemble
reproduces every quantum moment of the successive-measurement chain.
Outputs use +-1 units throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ResourceMismatchError
from .randomness import RandomStream, sample_unit_sphere, sgn
from .spin_core import require_unit


@dataclass
class TemporalRound:
    """Outputs alpha_1..alpha_n and the cbit pair sent before each step i >= 2."""

    outputs: list
    transcripts: list  # entry i-2 holds the pair (c_{2i-3}, c_{2i-2})


def temporal_round(a0, directions, shared) -> TemporalRound:
    """Run the protocol for one round (or a batch, if the shared vectors
    carry a leading batch axis).

    alpha_1 = sgn[a_1 . (lam_0 + a_0)]; for i > 1 the cbits are
    c_{2i-3} = alpha_{i-1} sgn(a_{i-1} . lam_{2i-3}) and likewise
    c_{2i-2}, and alpha_i = sgn[a_i . (c_{2i-3} lam_{2i-3} +
    c_{2i-2} lam_{2i-2})].  `shared` must hold exactly 2n+1 vectors,
    indexed as lam_0 plus the pairs (lam_{2i-3}, lam_{2i-2}).
    """
    a0 = require_unit(a0)
    directions = [require_unit(d) for d in directions]
    n = len(directions)
    if len(shared) != 2 * n + 1:
        raise ResourceMismatchError(
            f"need 2n+1 = {2 * n + 1} shared vectors, got {len(shared)}")
    lams = [np.asarray(v, float) for v in shared]

    outputs = []
    transcripts = []
    alpha = sgn((lams[0] + a0) @ directions[0])
    outputs.append(alpha)
    for i in range(2, n + 1):
        l_odd = lams[2 * i - 3]
        l_even = lams[2 * i - 2]
        prev_dir = directions[i - 2]
        c_odd = outputs[-1] * sgn(l_odd @ prev_dir)
        c_even = outputs[-1] * sgn(l_even @ prev_dir)
        alpha = sgn((c_odd[..., None] * l_odd + c_even[..., None] * l_even)
                    @ directions[i - 1])
        outputs.append(alpha)
        transcripts.append((c_odd, c_even))
    return TemporalRound(outputs, transcripts)


def temporal_ensemble(a0, directions, n_rounds: int, seed: int,
                      initial_weights=None) -> TemporalRound:
    """Draw shared vectors for n_rounds rounds and run them in one batch.

    A mixed preparation is handled by sampling the initial sign from
    `initial_weights` = (p_plus, p_minus) and flipping a0 accordingly;
    the protocol itself is stated for the pure +1 input.
    """
    a0 = require_unit(np.asarray(a0, float))
    n = len(directions)
    stream = RandomStream(seed)
    shared = [sample_unit_sphere(stream, n_rounds) for _ in range(2 * n + 1)]
    if initial_weights is not None:
        p_plus = float(initial_weights[0])
        signs = np.where(stream.uniform(0.0, 1.0, n_rounds) < p_plus, 1.0, -1.0)
        axis = signs[:, None] * a0
    else:
        axis = a0
    return temporal_round(axis, directions, shared)


def temporal_moment(rounds: TemporalRound, index_set) -> tuple[float, float]:
    """Empirical mean and standard error of the product of the selected
    outputs (1-based step indices)."""
    idx = sorted(index_set)
    if not idx or idx[0] < 1 or idx[-1] > len(rounds.outputs):
        raise ValueError("index set must select steps 1..n")
    product = np.ones_like(rounds.outputs[0])
    for i in idx:
        product = product * rounds.outputs[i - 1]
    n = product.size
    mean = float(np.mean(product))
    stderr = float(np.std(product, ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    return mean, stderr

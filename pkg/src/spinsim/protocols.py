"""Classical communication protocols for two spin-s singlet correlations.

One round maps the two measurement directions plus shared randomness to
outputs (alpha, beta) and a cbit transcript.  All round functions accept
either single (3,) unit vectors in the shared bundle or batches (n, 3),
and broadcast accordingly, so the same code path serves single rounds
and vectorized Monte Carlo ensembles.

Outputs are in physical eigenvalue units {s, s-1, ..., -s} so that
ensemble correlations compare directly against the exact singlet
correlation -(1/3) s (s+1) a.b.  The exception is the non-maximally
entangled two-qubit protocol, whose outputs are +-1 by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ResourceMismatchError, UnsupportedRegimeError
from .randomness import SharedRandomness, biased_sign, sgn
from .spin_core import Spin, require_unit


@dataclass(frozen=True)
class ResourceCount:
    """Worst-case resources of one protocol round."""

    n_cbits: int
    n_lambda: int
    n_mu: int
    n_nu: int


@dataclass
class RoundOutcome:
    """Outputs of one round: alpha and beta plus the cbit transcript.

    For batched shared randomness the fields are arrays with the batch
    shape; cbits has one leading axis per transcript position.
    """

    alpha: np.ndarray
    beta: np.ndarray
    cbits: list


# ---------------------------------------------------------------------------
# protocol kinds

@dataclass(frozen=True)
class TonerBacon:
    """One-cbit simulation of the two-qubit singlet."""

    @property
    def spin(self) -> Spin:
        return Spin(1)

    def resources(self) -> ResourceCount:
        return ResourceCount(1, 1, 1, 0)


@dataclass(frozen=True)
class BinaryRecursive:
    """Recursive protocol over the binary digits of d = 2s+1; any spin."""

    spin: Spin

    def resources(self) -> ResourceCount:
        return protocol1_resources(self.spin)


@dataclass(frozen=True)
class PAdicComposite:
    """Base-P composition of n sub-rounds at spin (P-1)/2; needs 2s+1 = P^n."""

    P: int
    n: int

    def __post_init__(self):
        if self.P < 2 or self.n < 1:
            raise ValueError(f"need P >= 2 and n >= 1, got P={self.P}, n={self.n}")

    @property
    def spin(self) -> Spin:
        return Spin(self.P ** self.n - 1)

    def resources(self) -> ResourceCount:
        return protocol2_resources(self.P, self.n)


@dataclass(frozen=True)
class NonMaxEntangled:
    """Two-cbit protocol for cos(g)|01> + sin(g)|10>, Bob's input in the x-y plane."""

    gamma: float

    def __post_init__(self):
        if not 0.0 < self.gamma < np.pi / 4:
            raise UnsupportedRegimeError(
                f"gamma must lie in (0, pi/4), got {self.gamma}")

    @property
    def spin(self) -> Spin:
        return Spin(1)

    def resources(self) -> ResourceCount:
        return ResourceCount(2, 3, 0, 0)


ProtocolKind = TonerBacon | BinaryRecursive | PAdicComposite | NonMaxEntangled


# ---------------------------------------------------------------------------
# Toner-Bacon round

def toner_bacon_round(a, b, lam, mu) -> RoundOutcome:
    """alpha = -(1/2) sgn(a.lam); c = sgn(a.lam) sgn(a.mu); beta = (1/2) sgn[b.(lam + c mu)]."""
    a = require_unit(a)
    b = require_unit(b)
    lam = np.asarray(lam, float)
    mu = np.asarray(mu, float)
    s_lam = sgn(lam @ a)
    c = s_lam * sgn(mu @ a)
    alpha = -0.5 * s_lam
    beta = 0.5 * sgn((lam + c[..., None] * mu) @ b)
    return RoundOutcome(alpha, beta, [c])


# ---------------------------------------------------------------------------
# protocol I: binary recursion over d = 2s+1

def binary_digits(d: int) -> list[int]:
    """Most-significant-first binary digits of d >= 1 (leading digit 1)."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    return [int(bit) for bit in bin(d)[2:]]


def protocol1_resources(spin: Spin) -> ResourceCount:
    """n cbits with 2^(n-1) < s+1 <= 2^n; one lambda/mu pair per binary
    digit of d = 2s+1 after the leading one, one nu per 1-digit."""
    spin = Spin.of(spin)
    digits = binary_digits(spin.d)
    n = len(digits) - 1
    n_nu = sum(digits[1:])
    return ResourceCount(n, n, n, n_nu)


def protocol1_round(spin: Spin, a, b, shared: SharedRandomness) -> RoundOutcome:
    """One round of the binary-recursive singlet protocol.

    The recursion walks the binary prefixes D of d = 2s+1 from the most
    significant digit.  A 0-digit step (even prefix, half-integer
    sub-spin) adds a weight-(D/4) sign term; a 1-digit step (odd prefix,
    integer sub-spin) adds a weight-((D+1)/4) sign term and gates the
    whole accumulated value with (1+f)/2, where f is the biased sign
    with bias (D-2)/D drawn from that level's nu.  Bob mirrors Alice
    with the cbit-corrected vectors lam + c mu.

    Randomness layout: lambdas[k] and mus[k] belong to recursion level
    k+1 (coarsest prefix first); nus are consumed in level order at the
    1-digit levels only.
    """
    spin = Spin.of(spin)
    a = require_unit(a)
    b = require_unit(b)
    res = protocol1_resources(spin)
    if shared.counts() != (res.n_lambda, res.n_mu, res.n_nu):
        raise ResourceMismatchError(
            f"bundle sizes {shared.counts()} do not match required "
            f"({res.n_lambda}, {res.n_mu}, {res.n_nu}) for s = {spin}")

    digits = binary_digits(spin.d)
    alpha = 0.0
    beta = 0.0
    cbits = []
    nu_index = 0
    prefix = 1
    for level, digit in enumerate(digits[1:]):
        prefix = 2 * prefix + digit
        lam = np.asarray(shared.lambdas[level], float)
        mu = np.asarray(shared.mus[level], float)
        a_sign = sgn(lam @ a)
        c = a_sign * sgn(mu @ a)
        b_sign = sgn((lam + c[..., None] * mu) @ b)
        cbits.append(c)
        if digit == 0:
            weight = prefix / 4.0
            alpha = weight * a_sign + alpha
            beta = weight * b_sign + beta
        else:
            bias = (prefix - 2.0) / prefix
            f = biased_sign(shared.nus[nu_index], bias)
            nu_index += 1
            gate = 0.5 * (1.0 + f)
            weight = (prefix + 1) / 4.0
            alpha = gate * (weight * a_sign + alpha)
            beta = gate * (weight * b_sign + beta)
    return RoundOutcome(-alpha, beta, cbits)


# ---------------------------------------------------------------------------
# protocol II: base-P composition, 2s+1 = P^n

def protocol2_resources(P: int, n: int) -> ResourceCount:
    """n independent sub-rounds at spin (P-1)/2, m = ceil(log2(P+1)) - 1 cbits each."""
    if P < 2 or n < 1:
        raise ValueError(f"need P >= 2 and n >= 1, got P={P}, n={n}")
    sub = protocol1_resources(Spin(P - 1))
    return ResourceCount(n * sub.n_cbits, n * sub.n_lambda, n * sub.n_mu, n * sub.n_nu)


def protocol2_round(P: int, n: int, a, b, shared: list[SharedRandomness]) -> RoundOutcome:
    """Compose n independent sub-rounds at spin (P-1)/2, weighting the
    k-th by P^(n-k); transcripts concatenate in sub-round order."""
    if len(shared) != n:
        raise ResourceMismatchError(
            f"expected {n} sub-bundles, got {len(shared)}")
    sub_spin = Spin(P - 1)
    alpha = 0.0
    beta = 0.0
    cbits = []
    for k in range(1, n + 1):
        sub = protocol1_round(sub_spin, a, b, shared[k - 1])
        weight = P ** (n - k)
        alpha = alpha + weight * sub.alpha
        beta = beta + weight * sub.beta
        cbits.extend(sub.cbits)
    return RoundOutcome(alpha, beta, cbits)


# ---------------------------------------------------------------------------
# non-maximally entangled two-qubit protocol

def nonmax_mixing_length(gamma: float, a_z: float) -> float:
    """The offset l = sqrt(1 - sin(2g) / (1 - |a_z cos(2g)|)) in [0, 1]."""
    denom = 1.0 - abs(a_z * np.cos(2 * gamma))
    arg = 1.0 - np.sin(2 * gamma) / denom
    if arg < -1e-12:
        raise UnsupportedRegimeError(
            f"sin(2g) + |a_z cos(2g)| = {np.sin(2 * gamma) + abs(a_z * np.cos(2 * gamma)):.6f} "
            "exceeds 1; outside the protocol's validity region")
    return float(np.sqrt(max(arg, 0.0)))


def nonmax_round(gamma: float, a, b, lam0, lam1, lam2) -> RoundOutcome:
    """One round of the two-cbit non-maximally entangled protocol.

    Requires 0 < gamma < pi/4, the validity constraint
    sin(2g) + |a_z cos(2g)| <= 1, and Bob's direction in the x-y plane.
    Outputs are +-1; reproduces <alpha> = a_z cos(2g), <beta> = 0 and
    <alpha beta> = sin(2g) a.b.
    """
    if not 0.0 < gamma < np.pi / 4:
        raise UnsupportedRegimeError(f"gamma must lie in (0, pi/4), got {gamma}")
    a = require_unit(a)
    b = require_unit(b)
    if abs(b[2]) > 1e-9:
        raise UnsupportedRegimeError(
            f"Bob's direction must lie in the x-y plane, got b_z = {b[2]}")
    ell = nonmax_mixing_length(gamma, a[2])
    lam0 = np.asarray(lam0, float)
    lam1 = np.asarray(lam1, float)
    lam2 = np.asarray(lam2, float)
    alpha = sgn(lam0 @ a + a[2] * np.cos(2 * gamma))
    s0 = sgn(lam0 @ a)
    c1 = s0 * sgn(lam1 @ a + ell)
    c2 = s0 * sgn(lam2 @ a + ell)
    beta = sgn((c1[..., None] * lam1 + c2[..., None] * lam2) @ b)
    return RoundOutcome(alpha, beta, [c1, c2])


def run_round(protocol: ProtocolKind, a, b, shared) -> RoundOutcome:
    """Dispatch one round for any protocol kind.

    `shared` is a SharedRandomness bundle, except for PAdicComposite
    where it is the list of n sub-bundles.
    """
    if isinstance(protocol, TonerBacon):
        if shared.counts() != (1, 1, 0):
            raise ResourceMismatchError(f"Toner-Bacon needs (1, 1, 0), got {shared.counts()}")
        return toner_bacon_round(a, b, shared.lambdas[0], shared.mus[0])
    if isinstance(protocol, BinaryRecursive):
        return protocol1_round(protocol.spin, a, b, shared)
    if isinstance(protocol, PAdicComposite):
        return protocol2_round(protocol.P, protocol.n, a, b, shared)
    if isinstance(protocol, NonMaxEntangled):
        if shared.counts() != (3, 0, 0):
            raise ResourceMismatchError(f"NonMax needs (3, 0, 0), got {shared.counts()}")
        return nonmax_round(protocol.gamma, a, b, *shared.lambdas)
    raise TypeError(f"unknown protocol kind: {protocol!r}")

"""Quantum correlations of successive spin measurements on one spin-s
system, and the temporal inequality evaluators built on them.

The closed forms below are expressed through the moments of the
prepared outcome distribution (chi and three cubic-moment
combinations).  A note on the three-measurement form: the compact
display commonly quoted for <a1 a2 a3> drops a cos(3 theta_1) factor on
its R term; the form used here carries that factor and agrees with the
brute-force projector-chain oracle to machine precision for every spin
(the dropped factor is invisible for s <= 1, where R vanishes
identically).

Correlations use physical eigenvalue units {s, ..., -s}.  The qubit
helpers additionally expose the +-1 unit convention (eigenvalues of
sigma_z taken as +-1) through a `units` flag, so both the sqrt(2)
inequality maxima and the s^n-scaled results are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import InstanceTooLargeError
from .search import SearchResult, SearchSpec, maximize, real_cubic_roots
from .spin_core import Spin, require_unit, transition_matrix

ORACLE_PATH_CAP = 300_000


# ---------------------------------------------------------------------------
# prepared states and their moment combinations

@dataclass(frozen=True)
class InitialState:
    """A mixture of a.S eigenstates along a fixed axis, plus white noise.

    `weights` are the probabilities of the outcomes s, s-1, ..., -s of
    a preparation measurement along `axis`; `noise_f` mixes in the
    maximally noisy state I/(2s+1), which is equivalent to flattening
    the weights toward uniform.
    """

    spin: Spin
    axis: np.ndarray
    weights: tuple
    noise_f: float = 0.0

    def __post_init__(self):
        require_unit(self.axis)
        w = np.asarray(self.weights, float)
        if w.size != self.spin.d:
            raise ValueError(f"need {self.spin.d} weights, got {w.size}")
        if np.any(w < -1e-12) or abs(w.sum() - 1.0) > 1e-9:
            raise ValueError("weights must be a probability vector")
        if not 0.0 <= self.noise_f <= 1.0:
            raise ValueError("noise_f must lie in [0, 1]")

    @classmethod
    def pure(cls, spin, axis, m=None, noise_f: float = 0.0) -> "InitialState":
        """Eigenstate |axis, m>; m defaults to the top of the ladder."""
        spin = Spin.of(spin)
        if m is None:
            m = spin.s
        w = np.zeros(spin.d)
        w[spin.index_of(m)] = 1.0
        return cls(spin, np.asarray(axis, float), tuple(w), noise_f)

    @classmethod
    def mixture(cls, spin, axis, weights, noise_f: float = 0.0) -> "InitialState":
        return cls(Spin.of(spin), np.asarray(axis, float), tuple(weights), noise_f)

    def effective_weights(self) -> np.ndarray:
        w = np.asarray(self.weights, float)
        return (1.0 - self.noise_f) * w + self.noise_f / self.spin.d

    def moment(self, power: int) -> float:
        m = self.spin.ladder()
        return float(np.sum(self.effective_weights() * m ** power))

    def chi_params(self) -> "ChiParams":
        return ChiParams.from_state(self)


@dataclass(frozen=True)
class ChiParams:
    """Moment combinations entering the two- and three-step closed forms."""

    spin: Spin
    mean: float   # sum of m p_m
    chi: float    # sum of m^2 p_m
    A: float      # 3 chi - s(s+1)
    B: float      # s(s+1) - chi
    M: float
    N: float
    R: float

    @property
    def xi(self) -> float:
        return self.chi / self.spin.s ** 2

    @classmethod
    def from_state(cls, state: InitialState) -> "ChiParams":
        spin = state.spin
        s = spin.s
        w = state.effective_weights()
        m = spin.ladder()
        chi = float(np.sum(w * m ** 2))
        ss1 = s * (s + 1)
        return cls(
            spin=spin,
            mean=float(np.sum(w * m)),
            chi=chi,
            A=3 * chi - ss1,
            B=ss1 - chi,
            M=float(np.sum(w * m * (9 * m ** 2 + ss1 - 3))),
            N=float(np.sum(w * m * (5 * ss1 - 3 * m ** 2 + 1))),
            R=float(np.sum(w * m * (5 * m ** 2 - 3 * ss1 + 1))),
        )

    @classmethod
    def stretched(cls, spin, xi: float = 1.0) -> "ChiParams":
        """Parameters with chi = xi s^2 and vanishing odd moments.

        Realized e.g. by an equal mixture of the +-s eigenstates diluted
        toward chi = xi s^2; only A and B matter for two-step physics.
        """
        spin = Spin.of(spin)
        s = spin.s
        chi = xi * s * s
        ss1 = s * (s + 1)
        return cls(spin=spin, mean=0.0, chi=chi, A=3 * chi - ss1, B=ss1 - chi,
                   M=0.0, N=0.0, R=0.0)


def _cos_angle(a, b) -> float:
    return float(np.clip(np.asarray(a, float) @ np.asarray(b, float), -1.0, 1.0))


# ---------------------------------------------------------------------------
# closed forms for one, two, and three successive measurements

def corr1(state: InitialState, a1) -> float:
    """<a1> = (sum of m p_m) cos(theta_1)."""
    return state.moment(1) * _cos_angle(state.axis, a1)


def corr2(state: InitialState, a1, a2) -> float:
    """<a1 a2> = (1/2) cos(theta_12) [A cos^2(theta_1) + B]."""
    p = state.chi_params()
    c1 = _cos_angle(state.axis, a1)
    c12 = _cos_angle(a1, a2)
    return 0.5 * c12 * (p.A * c1 * c1 + p.B)


def corr3(state: InitialState, a1, a2, a3) -> float:
    """<a1 a2 a3> closed form (with the cos(3 theta_1) factor on R)."""
    p = state.chi_params()
    t1 = float(np.arccos(_cos_angle(state.axis, a1)))
    c12 = _cos_angle(a1, a2)
    c23 = _cos_angle(a2, a3)
    return corr3_from_angles(p, t1, c12, c23)


def corr3_from_angles(p: ChiParams, theta1, cos12, cos23):
    c1 = np.cos(theta1)
    return (cos23 / 16.0) * (
        c1 * (p.M * cos12 ** 2 + p.N)
        + p.R * np.cos(3.0 * np.asarray(theta1)) * (3.0 * cos12 ** 2 - 1.0)
    )


def second_moment_after_one(p: ChiParams, cos1) -> float:
    """<a1^2> = (1/2)[B + A cos^2(theta_1)]."""
    return 0.5 * (p.B + p.A * cos1 * cos1)


def corr13(state: InitialState, a1, a2, a3) -> float:
    """<a1 a3> with a2 measured in between: cos(theta_32) <a1 a2>."""
    return _cos_angle(a3, a2) * corr2(state, a1, a2)


def corr23(state: InitialState, a1, a2, a3) -> float:
    """<a2 a3> with a1 measured first: cos(theta_32) <a2^2>."""
    p = state.chi_params()
    s = state.spin.s
    ss1 = s * (s + 1)
    m2_1 = second_moment_after_one(p, _cos_angle(state.axis, a1))
    c12 = _cos_angle(a1, a2)
    m2_2 = 0.5 * ((ss1 - m2_1) + (3 * m2_1 - ss1) * c12 * c12)
    return _cos_angle(a3, a2) * m2_2


# ---------------------------------------------------------------------------
# brute-force projector-chain oracle

def successive_oracle(state: InitialState, directions, powers=None,
                      units: str = "physical") -> float:
    """<a1^w1 ... an^wn> by explicit summation over all outcome paths.

    The joint path probabilities are products of single-step transition
    probabilities |<a_{i-1}, m_{i-1} | a_i, m_i>|^2 starting from the
    preparation distribution, exactly the Markov chain the projector
    algebra produces.  Deliberately independent of the closed forms.
    """
    directions = [np.asarray(d, float) for d in directions]
    n = len(directions)
    if powers is None:
        powers = [1] * n
    if len(powers) != n:
        raise ValueError("need one exponent per measurement")
    d = state.spin.d
    if d ** n > ORACLE_PATH_CAP:
        raise InstanceTooLargeError(
            f"{d}^{n} paths exceed the cap of {ORACLE_PATH_CAP}")

    ladder = state.spin.ladder()
    values = ladder * (2.0 if units == "pm_one" else 1.0)
    if units == "pm_one" and state.spin != Spin(1):
        raise ValueError("pm_one units only apply to spin 1/2")

    chain = [state.axis] + directions
    transitions = [transition_matrix(state.spin, chain[i], chain[i + 1])
                   for i in range(n)]
    w0 = state.effective_weights()
    total = 0.0
    for path in itertools.product(range(d), repeat=n):
        prob = 1.0
        prev = None
        weight = 1.0
        for i, idx in enumerate(path):
            if i == 0:
                prob = float(np.sum(w0 * transitions[0][:, idx]))
            else:
                prob *= transitions[i][prev, idx]
            prev = idx
            weight *= values[idx] ** powers[i]
        total += prob * weight
    return total


# ---------------------------------------------------------------------------
# qubit (+-1 units) closed forms

def qubit_joint_prob(initial_sign: int, a0, directions, outcomes) -> float:
    """Joint probability 2^-n prod (1 + a_{i-1} a_i cos theta_{i-1,i})."""
    if initial_sign not in (+1, -1):
        raise ValueError("initial_sign must be +-1")
    chain = [np.asarray(a0, float)] + [np.asarray(d, float) for d in directions]
    signs = [initial_sign] + list(outcomes)
    if len(signs) != len(chain):
        raise ValueError("need one outcome per measurement")
    prob = 1.0
    for i in range(1, len(chain)):
        prob *= 0.5 * (1.0 + signs[i - 1] * signs[i] * _cos_angle(chain[i - 1], chain[i]))
    return prob


def _qubit_bias(state: InitialState) -> float:
    w = state.effective_weights()
    return float(w[0] - w[1])


def qubit_product_moment(state: InitialState, directions, index_set) -> float:
    """<prod of alpha_i over index_set> for a qubit, +-1 units.

    Expanding the joint distribution, a consecutive pair (i, j) of
    selected indices contributes the chain of adjacent cosines between
    steps i and j; an odd selection additionally chains back to the
    preparation axis with a (p+ - p-) factor.
    """
    idx = sorted(index_set)
    if not idx or idx[0] < 1 or idx[-1] > len(directions):
        raise ValueError("index set must select measurement steps 1..n")
    chain = [state.axis] + [np.asarray(d, float) for d in directions]

    def link(i, j):
        out = 1.0
        for m in range(i + 1, j + 1):
            out *= _cos_angle(chain[m - 1], chain[m])
        return out

    value = 1.0
    if len(idx) % 2 == 1:
        value *= _qubit_bias(state) * link(0, idx[0])
        idx = idx[1:]
    for k in range(0, len(idx), 2):
        value *= link(idx[k], idx[k + 1])
    return value


def qubit_corr_lastk(state: InitialState, directions, k: int) -> float:
    """<a_{n-k} ... a_n> for the last k+1 of n successive measurements.

    Odd k: a product of adjacent-pair cosines, independent of earlier
    measurements.  Even k: carries the full cosine chain back to the
    preparation axis, so it depends on everything prior.
    """
    n = len(directions)
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    return qubit_product_moment(state, directions, range(n - k, n + 1))


# ---------------------------------------------------------------------------
# Bell-type evaluators for two and three successive measurements

def bi_value(state: InitialState, a1, a1p, a2, a2p) -> float:
    """(1/2)[<a1 a2> + <a1 a2'> + <a1' a2> - <a1' a2'>]; |BI| <= s^2 in HVT."""
    return 0.5 * (corr2(state, a1, a2) + corr2(state, a1, a2p)
                  + corr2(state, a1p, a2) - corr2(state, a1p, a2p))


def bi_value_planar(p: ChiParams, t1, t1p, t2, t2p) -> float:
    """The planar BI profile: all four directions share an azimuth, with
    polar angles measured from the preparation axis."""
    def c2(x, y):
        return 0.5 * np.cos(y - x) * (p.A * np.cos(x) ** 2 + p.B)
    return 0.5 * (c2(t1, t2) + c2(t1, t2p) + c2(t1p, t2) - c2(t1p, t2p))


def _as_chi_params(state_or_params) -> ChiParams:
    if isinstance(state_or_params, InitialState):
        return state_or_params.chi_params()
    return state_or_params


def eta2_profile(state_or_params, theta1) -> np.ndarray:
    """eta_2(theta_1) = (1/2s^2)|sin + cos|(A cos^2 + B), the reduced
    maximization profile at t1' = pi - t1, t2 = pi/2, t2' = 0."""
    p = _as_chi_params(state_or_params)
    theta1 = np.asarray(theta1, float)
    c = np.cos(theta1)
    return np.abs(np.sin(theta1) + c) * (p.A * c * c + p.B) / (2.0 * p.spin.s ** 2)


def eta2_cubic_roots(state_or_params) -> np.ndarray:
    """Real roots (in tan theta_1) of the eta_2 stationarity cubic
    B t^3 + (2A - B) t^2 + (3A + B) t - (A + B) = 0."""
    p = _as_chi_params(state_or_params)
    return real_cubic_roots(p.B, 2 * p.A - p.B, 3 * p.A + p.B, -(p.A + p.B))


def eta2_max(state_or_params) -> tuple[float, float]:
    """(max eta_2, argmax theta_1), maximizing over the stationary angles."""
    p = _as_chi_params(state_or_params)
    candidates = []
    for t in eta2_cubic_roots(p):
        theta = float(np.arctan(t))
        candidates.extend([theta, theta + np.pi])
    candidates.extend([0.0, np.pi / 2])
    values = eta2_profile(p, np.array(candidates))
    best = int(np.argmax(values))
    return float(values[best]), float(candidates[best] % (2 * np.pi))


def noise_chi_params(spin, noise_f: float) -> ChiParams:
    """Parameters of the extremal (chi = s^2) state mixed with noise f."""
    spin = Spin.of(spin)
    s = spin.s
    chi = (1 - noise_f) * s * s + noise_f * s * (s + 1) / 3.0
    ss1 = s * (s + 1)
    return ChiParams(spin=spin, mean=0.0, chi=chi, A=3 * chi - ss1, B=ss1 - chi,
                     M=0.0, N=0.0, R=0.0)


# ---------------------------------------------------------------------------
# Mermin-Klyshko polynomials

def mk_terms(n: int) -> dict[tuple, float]:
    """Coefficients of M_n over full products; keys are prime patterns
    (0 unprimed, 1 primed per step)."""
    if n < 1:
        raise ValueError("need n >= 1")
    terms = {(0,): 1.0}
    primed = {(1,): 1.0}
    for _ in range(2, n + 1):
        new = {}
        for pattern, coeff in terms.items():
            for ext, sign in ((0, 0.5), (1, 0.5)):
                key = pattern + (ext,)
                new[key] = new.get(key, 0.0) + sign * coeff
        for pattern, coeff in primed.items():
            for ext, sign in ((0, 0.5), (1, -0.5)):
                key = pattern + (ext,)
                new[key] = new.get(key, 0.0) + sign * coeff
        new = {k: c for k, c in new.items() if c != 0.0}
        terms = new
        primed = {tuple(1 - e for e in k): c for k, c in new.items()}
    return terms


def mk_value(state: InitialState, unprimed, primed, units: str = "physical") -> float:
    """<M_n> for the given settings (lists of unprimed/primed directions).

    Spin 1/2 in +-1 units goes through the qubit chain rule for any n;
    otherwise each full-product term runs through the brute-force
    oracle, which caps (2s+1)^n at desk scale.
    """
    n = len(unprimed)
    if len(primed) != n:
        raise ValueError("need one primed direction per step")
    use_qubit = units == "pm_one"
    if use_qubit and state.spin != Spin(1):
        raise ValueError("pm_one units only apply to spin 1/2")
    total = 0.0
    for pattern, coeff in mk_terms(n).items():
        dirs = [primed[i] if e else unprimed[i] for i, e in enumerate(pattern)]
        if use_qubit:
            term = qubit_product_moment(state, dirs, range(1, n + 1))
        else:
            term = successive_oracle(state, dirs)
        total += coeff * term
    return total


def mki_value(state: InitialState, unprimed, primed, units: str = "physical") -> float:
    """<M_3>, the Mermin-Klyshko combination for three steps."""
    return mk_value(state, unprimed, primed, units)


def svetlichny_value(state: InitialState, unprimed, primed, units: str = "physical") -> float:
    """<MKI> + <MKI'> with MKI' the prime-swapped polynomial; |SI| <= 2s^3."""
    return (mk_value(state, unprimed, primed, units)
            + mk_value(state, primed, unprimed, units))


def mki_planar_value(p: ChiParams, angles) -> float:
    """<M_3> on planar settings (t1, t1', t2, t2', t3, t3') via the
    three-step closed form; used by the eta_3 table search."""
    t1, t1p, t2, t2p, t3, t3p = np.moveaxis(np.asarray(angles, float), -1, 0)

    def term(x, y, z):
        return corr3_from_angles(p, x, np.cos(y - x), np.cos(z - y))

    return 0.5 * (term(t1, t2, t3p) + term(t1, t2p, t3)
                  + term(t1p, t2, t3) - term(t1p, t2p, t3p))


def eta3_max(spin, grid_points: int = 10, seed: int = 0) -> SearchResult:
    """Maximal |<M_3>| / s^3 over planar settings for the pure top-ladder state."""
    spin = Spin.of(spin)
    state = InitialState.pure(spin, np.array([0.0, 0.0, 1.0]))
    p = state.chi_params()

    def objective(points):
        return np.abs(mki_planar_value(p, points))

    spec = SearchSpec(bounds=tuple((0.0, 2 * np.pi) for _ in range(6)),
                      grid_points=grid_points, refine_tolerance=1e-9, multi_start=6)
    result = maximize(objective, spec, seed=seed, vectorized=True)
    result.value /= spin.s ** 3
    return result


# ---------------------------------------------------------------------------
# chained, Scarani-Gisin, hybrid, and disentangling evaluators (qubit)

def chained_value(angles) -> float:
    """Chained Bell combination over 2n alternating settings at planar
    angles: sum of the 2n-1 adjacent two-step correlations minus the
    wrap-around term.  HVT bound is 2n - 2; quantum optimum 2n cos(pi/2n)."""
    t = np.asarray(angles, float)
    if t.size < 4 or t.size % 2 != 0:
        raise ValueError("need an even number (>= 4) of settings")
    adjacent = np.cos(np.diff(t)).sum()
    wrap = np.cos(t[-1] - t[0])
    return float(np.abs(adjacent - wrap))


def chained_optimum(n: int) -> tuple[float, float]:
    """(optimal value, optimal equal spacing) of the chained combination
    with 2n settings; the equal-spacing profile is
    (2n-1) cos t - cos((2n-1) t), stationary at t = pi/2n."""
    if n < 2:
        raise ValueError("need n >= 2")
    m = 2 * n

    def profile(t):
        return (m - 1) * np.cos(t) - np.cos((m - 1) * t)

    spec = SearchSpec(bounds=((0.0, np.pi / 2),), grid_points=64,
                      refine_tolerance=1e-13, multi_start=5)
    result = maximize(lambda x: profile(x[0]), spec)
    return result.value, float(result.argmax[0])


def two_step_bi_pm_one(t_first, t_first_p, t_second, t_second_p) -> float:
    """BI of two successive qubit measurements in +-1 units: state
    independent, each correlation is the cosine of the angle between
    the two settings."""
    return 0.5 * (np.cos(t_second - t_first) + np.cos(t_second_p - t_first)
                  + np.cos(t_second - t_first_p) - np.cos(t_second_p - t_first_p))


def scarani_gisin_sum(angles):
    """B(k-1, k) + B(k, k+1) for three consecutive steps with planar
    settings (t_{k-1}, t'_{k-1}, t_k, t'_k, t_{k+1}, t'_{k+1}); the
    middle settings are shared by both Bell expressions.  Accepts a
    single angle vector or a batch with the angles on the last axis."""
    t = np.asarray(angles, float)
    value = (two_step_bi_pm_one(t[..., 0], t[..., 1], t[..., 2], t[..., 3])
             + two_step_bi_pm_one(t[..., 2], t[..., 3], t[..., 4], t[..., 5]))
    return float(value) if np.ndim(value) == 0 else value


def scarani_gisin_chain(angles) -> float:
    """Sum of consecutive two-step Bell expressions along a chain of
    steps; angles alternate (t_i, t'_i) per step."""
    t = np.asarray(angles, float)
    if t.size % 2 != 0 or t.size < 6:
        raise ValueError("need (t, t') pairs for at least three steps")
    steps = t.reshape(-1, 2)
    total = 0.0
    for i in range(len(steps) - 1):
        total += two_step_bi_pm_one(steps[i, 0], steps[i, 1],
                                    steps[i + 1, 0], steps[i + 1, 1])
    return float(total)


def scarani_gisin_paper_angles() -> np.ndarray:
    """An explicit assignment reaching sqrt(2) + sqrt(2): consecutive
    angle gaps of pi/4 except two 3*pi/4 gaps ending on primed settings."""
    return np.array([0.0, np.pi / 2, np.pi / 4, -np.pi / 4, 0.0, np.pi / 2])


def scarani_gisin_optimum(seed: int = 0) -> float:
    """Maximized three-step sum; longer chains repeat the optimal pair
    pattern, gaining sqrt(2) per additional step."""
    spec = SearchSpec(bounds=tuple((0.0, 2 * np.pi) for _ in range(6)),
                      grid_points=9, refine_tolerance=1e-11, multi_start=12)
    return maximize(scarani_gisin_sum, spec, seed=seed, vectorized=True).value


# hybrid inequalities mixing tri- and bi-correlations -----------------------

_HYBRID_TRIPLES = (
    (+1.0, (0, 0, 0)),
    (-1.0, (0, 1, 1)),
    (-1.0, (1, 0, 1)),
    (-1.0, (1, 1, 0)),
)


def hybrid_values(angles, middle: str = "unprimed") -> tuple[float, float]:
    """The two hybrid tri/bi combinations at planar settings
    (t1, t1', t2, t2', t3, t3') for a pure qubit prepared along angle 0.

    The combination is the Mermin-like set of four triple correlations
    minus w times the pair correlations <a1 a2> + <a1 a3> + <a2 a3>,
    with weight w = 1 (first value, local-realistic window [-5, 3]) and
    w = 2 (second value, window [-8, 4]).  The 1-3 pair correlation is
    mediated by whichever step-2 measurement ran in those rounds;
    `middle` selects the unprimed or primed setting.
    """
    t = np.asarray(angles, float)
    slot = {(0, 0): t[..., 0], (0, 1): t[..., 1], (1, 0): t[..., 2],
            (1, 1): t[..., 3], (2, 0): t[..., 4], (2, 1): t[..., 5]}
    tri = sum(sign * np.cos(slot[(0, i)]) * np.cos(slot[(2, k)] - slot[(1, j)])
              for sign, (i, j, k) in _HYBRID_TRIPLES)
    mid = slot[(1, 0)] if middle == "unprimed" else slot[(1, 1)]
    pairs = (np.cos(slot[(1, 0)] - slot[(0, 0)])
             + np.cos(mid - slot[(0, 0)]) * np.cos(slot[(2, 0)] - mid)
             + np.cos(slot[(2, 0)] - slot[(1, 0)]))
    h1, h2 = tri - pairs, tri - 2 * pairs
    if np.ndim(h1) == 0:
        return float(h1), float(h2)
    return h1, h2


def hybrid_extremes(seed: int = 0, grid_points: int = 8) -> dict:
    """Optimized extremes of both hybrid combinations.

    The certified value at a setting is the one robust to the choice of
    mediating step-2 measurement: the smaller of the two mediations
    when maximizing and the larger when minimizing.  The robust
    objectives carry kinks where the mediations cross, so the polish
    stage uses many starts.
    """
    spec = SearchSpec(bounds=tuple((0.0, 2 * np.pi) for _ in range(6)),
                      grid_points=grid_points, refine_tolerance=1e-10, multi_start=40)
    out = {}
    for slot_idx, name in ((0, "tri_bi"), (1, "bi_tri")):
        def upper(x, k=slot_idx):
            return np.minimum(hybrid_values(x, "unprimed")[k],
                              hybrid_values(x, "primed")[k])

        def lower(x, k=slot_idx):
            return -np.maximum(hybrid_values(x, "unprimed")[k],
                               hybrid_values(x, "primed")[k])

        hi = maximize(upper, spec, seed=seed, vectorized=True).value
        lo = -maximize(lower, spec, seed=seed, vectorized=True).value
        out[name] = (lo, hi)
    return out


def disentangling_bound(state: InitialState, a1, a1p, a2, a3, a3p) -> float:
    """|BI| formed on steps 1 and 3 with a fixed step-2 measurement in
    between; provably <= cos(theta_32) s^2 <= s^2."""
    c32 = _cos_angle(a3, a2)
    c3p2 = _cos_angle(a3p, a2)
    return 0.5 * abs((c32 + c3p2) * corr2(state, a1, a2)
                     + (c32 - c3p2) * corr2(state, a1p, a2))

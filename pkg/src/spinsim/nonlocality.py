"""Hardy and Cabello nonlocality-without-inequality machinery for
two-qubit pure states.

The state is cos(beta)|00> + sin(beta) e^{i gamma}|11> with Schmidt
angle beta in (0, pi/2).  Four spin observables F, D (first qubit) and
G, E (second qubit) with outcomes +-1 define the joint probabilities

    q1 = P(F=+1, G=+1), q2 = P(D=+1, G=-1),
    q3 = P(F=-1, E=+1), q4 = P(D=+1, E=+1),

and local realism forces q4 <= q1 + q2 + q3.  The arguments here zero
out some of q1..q3 and maximize what remains of the gap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .search import SearchSpec, maximize
from .spin_core import Spin, eigenbasis, unit_from_angles


@dataclass(frozen=True)
class SchmidtState:
    """Two-qubit pure state cos(beta)|00> + sin(beta) e^{i gamma}|11>."""

    beta: float
    gamma: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.beta < np.pi / 2:
            raise ValueError(f"beta must lie in (0, pi/2), got {self.beta}")

    @property
    def is_maximally_entangled(self) -> bool:
        return abs(self.beta - np.pi / 4) < 1e-12

    def amplitudes(self) -> np.ndarray:
        psi = np.zeros(4, dtype=complex)
        psi[0] = np.cos(self.beta)
        psi[3] = np.sin(self.beta) * np.exp(1j * self.gamma)
        return psi


@dataclass(frozen=True)
class ObservableAngles:
    """Polar/azimuthal angles of the four measured spin directions."""

    theta_f: float
    phi_f: float
    theta_d: float
    phi_d: float
    theta_g: float
    phi_g: float
    theta_e: float
    phi_e: float


def _pair_prob(cb, sb, th1, th2, phase):
    """Shared shape of the four joint probabilities: the (+,+) pattern
    in half-angle functions with an interference phase."""
    c1, s1 = np.cos(th1 / 2), np.sin(th1 / 2)
    c2, s2 = np.cos(th2 / 2), np.sin(th2 / 2)
    return (cb * c1 * c2) ** 2 + (sb * s1 * s2) ** 2 \
        + 2 * cb * sb * c1 * s1 * c2 * s2 * np.cos(phase)


def cabello_probs(state: SchmidtState, angles: ObservableAngles) -> tuple:
    """(q1, q2, q3, q4) from the closed-form half-angle expressions."""
    cb, sb = np.cos(state.beta), np.sin(state.beta)
    g = state.gamma
    q1 = _pair_prob(cb, sb, angles.theta_f, angles.theta_g,
                    angles.phi_f + angles.phi_g - g)
    q2 = _pair_prob(cb, sb, angles.theta_d, np.pi - angles.theta_g,
                    angles.phi_d + angles.phi_g + np.pi - g)
    q3 = _pair_prob(cb, sb, np.pi - angles.theta_f, angles.theta_e,
                    angles.phi_f + angles.phi_e + np.pi - g)
    q4 = _pair_prob(cb, sb, angles.theta_d, angles.theta_e,
                    angles.phi_d + angles.phi_e - g)
    return float(q1), float(q2), float(q3), float(q4)


def cabello_probs_oracle(state: SchmidtState, angles: ObservableAngles) -> tuple:
    """The same four probabilities by direct 4x4 state-vector projection."""
    psi = state.amplitudes()
    qubit = Spin(1)

    def projector(theta, phi, sign):
        basis = eigenbasis(qubit, unit_from_angles(theta, phi))
        vec = basis.eigenvectors[:, 0 if sign > 0 else 1]
        return np.outer(vec, vec.conj())

    def joint(th_a, ph_a, sign_a, th_b, ph_b, sign_b):
        op = np.kron(projector(th_a, ph_a, sign_a), projector(th_b, ph_b, sign_b))
        return float(np.real(np.vdot(psi, op @ psi)))

    a = angles
    return (
        joint(a.theta_f, a.phi_f, +1, a.theta_g, a.phi_g, +1),
        joint(a.theta_d, a.phi_d, +1, a.theta_g, a.phi_g, -1),
        joint(a.theta_f, a.phi_f, -1, a.theta_e, a.phi_e, +1),
        joint(a.theta_d, a.phi_d, +1, a.theta_e, a.phi_e, +1),
    )


def cabello_constraints(state: SchmidtState, theta: float) -> float:
    """Partner polar angle enforcing a zero joint probability:
    tan(theta_out/2) = tan(beta) tan(theta_in/2).

    With the matching phase locked at cos(...) = -1 this makes
    q3 (theta_in = theta_E, theta_out = theta_F) or
    q2 (theta_in = theta_D, theta_out = theta_G) vanish identically.
    The tangent singularity at theta = pi maps to pi.
    """
    if abs(theta - np.pi) < 1e-12:
        return np.pi
    return 2.0 * np.arctan(np.tan(state.beta) * np.tan(theta / 2.0))


def solved_angles(state: SchmidtState, theta_d: float, theta_e: float,
                  phase_sign: float = -1.0) -> ObservableAngles:
    """Angles with the q2 = q3 = 0 constraints applied and every phase
    pinned: the free cosine cos(phi_D + phi_E - gamma) sits at
    phase_sign (+-1); the paper's branch is -1."""
    g = state.gamma
    phi_g = 0.0
    phi_d = g - phi_g            # cos(phi_D + phi_G + pi - gamma) = -1
    offset = 0.0 if phase_sign < 0 else np.pi
    phi_e = np.pi + g - phi_d + offset   # cos(phi_D + phi_E - gamma) = phase_sign
    phi_f = g - phi_e            # cos(phi_F + phi_E + pi - gamma) = -1
    return ObservableAngles(
        theta_f=cabello_constraints(state, theta_e), phi_f=phi_f,
        theta_d=theta_d, phi_d=phi_d,
        theta_g=cabello_constraints(state, theta_d), phi_g=phi_g,
        theta_e=theta_e, phi_e=phi_e,
    )


def cabello_objective(state: SchmidtState, theta_d, theta_e):
    """q4 - q1 with q2 = q3 = 0 enforced and phases at the optimum.
    Accepts scalars or broadcasting arrays of angles."""
    tb = np.tan(state.beta)
    td = np.tan(np.asarray(theta_d) / 2.0)
    te = np.tan(np.asarray(theta_e) / 2.0)
    cb2 = np.cos(state.beta) ** 2
    q4 = (1 - tb * td * te) ** 2 / ((1 + td * td) * (1 + te * te))
    q1 = (1 - tb ** 3 * td * te) ** 2 / ((1 + (tb * td) ** 2) * (1 + (tb * te) ** 2))
    value = cb2 * (q4 - q1)
    return float(value) if np.ndim(value) == 0 else value


def cabello3_objective(state: SchmidtState, theta_d, theta_e, theta_g):
    """q4 - (q1 + q2) with only q3 = 0 enforced, phases at the optimum.
    Accepts scalars or broadcasting arrays of angles."""
    theta_d = np.asarray(theta_d)
    theta_e = np.asarray(theta_e)
    theta_g = np.asarray(theta_g)
    cb, sb = np.cos(state.beta), np.sin(state.beta)
    tb = np.tan(state.beta)
    te = np.tan(theta_e / 2.0)
    tg = np.tan(theta_g / 2.0)
    cd, sd = np.cos(theta_d / 2.0), np.sin(theta_d / 2.0)
    ce, se = np.cos(theta_e / 2.0), np.sin(theta_e / 2.0)
    cg, sg = np.cos(theta_g / 2.0), np.sin(theta_g / 2.0)
    q4 = (cb * cd * ce + sb * sd * se) ** 2
    q2 = (cb * cd * sg + sb * sd * cg) ** 2
    q1 = (cb * cg) ** 2 / (1 + (tb * te) ** 2) * (1 - tb ** 2 * te * tg) ** 2
    value = q4 - q2 - q1
    return float(value) if np.ndim(value) == 0 else value


def hardy_theta_e(state: SchmidtState, theta_d):
    """theta_E making q1 vanish on top of q2 = q3 = 0:
    tan(theta_D/2) tan(theta_E/2) = cot(beta)^3."""
    td = np.tan(np.asarray(theta_d) / 2.0)
    if np.any(td == 0.0):
        raise ValueError("theta_D = 0 leaves q1 = 0 unsolvable")
    return 2.0 * np.arctan(1.0 / (np.tan(state.beta) ** 3 * td))


def hardy_objective(state: SchmidtState, theta_d):
    """q4 with q1 = q2 = q3 = 0 all enforced.

    For the maximally entangled state the constraints force q4 = 0 for
    every theta_D, so the argument cannot run there.
    """
    theta_d = np.asarray(theta_d)
    theta_e = hardy_theta_e(state, theta_d)
    cb, sb = np.cos(state.beta), np.sin(state.beta)
    cd, sd = np.cos(theta_d / 2.0), np.sin(theta_d / 2.0)
    ce, se = np.cos(theta_e / 2.0), np.sin(theta_e / 2.0)
    value = (cb * cd * ce - sb * sd * se) ** 2
    return float(value) if np.ndim(value) == 0 else value


# ---------------------------------------------------------------------------
# maximization over settings (and over states)

@dataclass
class ArgumentMaximum:
    value: float
    argmax: np.ndarray
    feasible: bool


_THETA_EPS = 1e-6


def cabello_max(state: SchmidtState, grid_points: int = 24, seed: int = 0,
                multi_start: int = 4) -> ArgumentMaximum:
    """Maximal q4 - q1 over (theta_D, theta_E) at fixed beta."""
    spec = SearchSpec(bounds=((_THETA_EPS, np.pi - _THETA_EPS),) * 2,
                      grid_points=grid_points, refine_tolerance=1e-10,
                      multi_start=multi_start)
    res = maximize(lambda x: cabello_objective(state, x[..., 0], x[..., 1]),
                   spec, seed=seed, vectorized=True)
    return ArgumentMaximum(max(res.value, 0.0), res.argmax, True)


def cabello3_max(state: SchmidtState, grid_points: int = 14, seed: int = 0,
                 multi_start: int = 4) -> ArgumentMaximum:
    """Maximal q4 - (q1 + q2) over (theta_D, theta_E, theta_G) at fixed beta."""
    spec = SearchSpec(bounds=((_THETA_EPS, np.pi - _THETA_EPS),) * 3,
                      grid_points=grid_points, refine_tolerance=1e-10,
                      multi_start=multi_start)
    res = maximize(lambda x: cabello3_objective(state, x[..., 0], x[..., 1], x[..., 2]),
                   spec, seed=seed, vectorized=True)
    return ArgumentMaximum(max(res.value, 0.0), res.argmax, True)


def hardy_max(state: SchmidtState, grid_points: int = 64, seed: int = 0,
              multi_start: int = 4) -> ArgumentMaximum:
    """Maximal q4 under all three zero constraints at fixed beta.

    Returns value 0 with feasible=False for the maximally entangled
    state, where the constraint set forces q4 = 0 identically.
    """
    if state.is_maximally_entangled:
        return ArgumentMaximum(0.0, np.array([np.nan]), False)
    spec = SearchSpec(bounds=((_THETA_EPS, np.pi - _THETA_EPS),),
                      grid_points=grid_points, refine_tolerance=1e-10,
                      multi_start=multi_start)
    res = maximize(lambda x: hardy_objective(state, x[..., 0]),
                   spec, seed=seed, vectorized=True)
    return ArgumentMaximum(max(res.value, 0.0), res.argmax, True)


def success_curve(cos_betas, gamma: float = 0.0) -> list[dict]:
    """Rows (cos beta, hardy, cabello, cabello3 maxima) for a grid of states."""
    rows = []
    for cb in cos_betas:
        cb = float(cb)
        if cb >= 1.0 - 1e-12:
            rows.append({"cos_beta": 1.0, "hardy_max": 0.0,
                         "cabello_max": 0.0, "cabello3_max": 0.0})
            continue
        state = SchmidtState(float(np.arccos(cb)), gamma)
        hardy = hardy_max(state)
        rows.append({
            "cos_beta": cb,
            "hardy_max": hardy.value,
            "cabello_max": cabello_max(state).value,
            "cabello3_max": cabello3_max(state).value,
        })
    return rows


def optimize_over_states(which: str = "cabello", n_beta: int = 48,
                         seed: int = 0) -> ArgumentMaximum:
    """Global maximum of an argument over both the state and the angles.

    All three objectives are invariant under the Schmidt relabeling
    (beta, thetas) -> (pi/2 - beta, pi - thetas), so the scan covers the
    beta > pi/4 branch only; a golden-section pass refines the best
    grid interval.  The argmax vector is (beta, theta...).
    """
    runner = {"cabello": cabello_max, "cabello3": cabello3_max, "hardy": hardy_max}[which]

    def per_state(beta):
        return runner(SchmidtState(beta), seed=seed)

    betas = np.linspace(np.pi / 4 + 0.02, np.pi / 2 - 0.04, n_beta)
    values = [per_state(b).value for b in betas]
    i = int(np.argmax(values))
    lo = betas[max(i - 1, 0)]
    hi = betas[min(i + 1, n_beta - 1)]
    # golden-section refinement on the smooth per-state maximum
    invphi = (np.sqrt(5.0) - 1) / 2
    a, b = lo, hi
    c, d = b - invphi * (b - a), a + invphi * (b - a)
    fc, fd = per_state(c).value, per_state(d).value
    for _ in range(28):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = per_state(c).value
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = per_state(d).value
    beta_best = (a + b) / 2
    result = per_state(beta_best)
    return ArgumentMaximum(result.value,
                           np.concatenate([[beta_best], np.atleast_1d(result.argmax)]),
                           result.feasible)

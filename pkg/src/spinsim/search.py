"""Derivative-free maximization: dense grid scan with simplex refinement.

The objectives in this package are smooth trigonometric rationals in a
handful of angles, so a coarse grid to locate basins plus Nelder-Mead
polish from the best cells is both robust and fast.  Also houses the
real-root extraction used by the stationarity cubics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize


@dataclass(frozen=True)
class SearchSpec:
    """Search box and budget for `maximize`."""

    bounds: tuple  # per-axis (lo, hi)
    grid_points: int = 12
    refine_tolerance: float = 1e-8
    multi_start: int = 10

    def __post_init__(self):
        if len(self.bounds) > 8:
            raise ValueError("dimension must be <= 8")
        if self.grid_points < 8:
            raise ValueError("grid_points must be >= 8")
        if self.refine_tolerance <= 0:
            raise ValueError("refine_tolerance must be positive")


@dataclass
class SearchResult:
    argmax: np.ndarray
    value: float
    n_evaluations: int


def maximize(objective, spec: SearchSpec, seed: int = 0, vectorized: bool = False) -> SearchResult:
    """Grid scan, then Nelder-Mead refinement from the best grid cells.

    `objective` maps a coordinate vector to a float; with
    vectorized=True it must also accept an (n, dim) array and return
    (n,).  Deterministic given (spec, seed); never returns a value
    below the best grid sample.  Non-finite objective values raise with
    the offending coordinates.
    """
    dim = len(spec.bounds)
    axes = [np.linspace(lo, hi, spec.grid_points) for lo, hi in spec.bounds]
    mesh = np.meshgrid(*axes, indexing="ij")
    points = np.stack([m.ravel() for m in mesh], axis=-1)
    if vectorized:
        values = np.asarray(objective(points), dtype=float)
    else:
        values = np.array([objective(p) for p in points], dtype=float)
    if not np.all(np.isfinite(values)):
        bad = points[np.argmax(~np.isfinite(values))]
        raise ValueError(f"objective is not finite at {bad}")
    n_evals = len(points)

    order = np.argsort(-values)
    starts = points[order[: spec.multi_start]]
    best_x = points[order[0]].copy()
    best_v = float(values[order[0]])

    span = np.array([hi - lo for lo, hi in spec.bounds])
    for x0 in starts:
        def negated(x):
            v = objective(x if not vectorized else x[None, :])
            return -float(v if np.isscalar(v) else np.asarray(v).reshape(-1)[0])

        result = minimize(
            negated, x0, method="Nelder-Mead",
            options={
                "xatol": spec.refine_tolerance,
                "fatol": spec.refine_tolerance ** 2,
                "maxiter": 4000 * dim,
                "maxfev": 4000 * dim,
                "initial_simplex": _initial_simplex(x0, span / (2 * spec.grid_points)),
            },
        )
        n_evals += result.nfev
        if np.isfinite(result.fun) and -result.fun > best_v:
            best_v = float(-result.fun)
            best_x = np.asarray(result.x, dtype=float)
    return SearchResult(argmax=best_x, value=best_v, n_evaluations=n_evals)


def _initial_simplex(x0, step):
    dim = x0.size
    simplex = np.tile(x0, (dim + 1, 1))
    for k in range(dim):
        simplex[k + 1, k] += step[k] if step[k] > 0 else 1e-3
    return simplex


def real_cubic_roots(c3: float, c2: float, c1: float, c0: float) -> np.ndarray:
    """All real roots of c3 x^3 + c2 x^2 + c1 x + c0, sorted ascending.

    Degenerate leading coefficients degrade to the quadratic/linear
    case.  Roots come from companion-matrix eigenvalues (np.roots) with
    imaginary parts below 1e-9 dropped, then one Newton polish.
    """
    coeffs = np.array([c3, c2, c1, c0], dtype=float)
    nz = np.flatnonzero(coeffs != 0.0)
    if nz.size == 0:
        raise ValueError("all coefficients are zero")
    coeffs = coeffs[nz[0]:]
    if coeffs.size == 1:
        return np.array([])
    roots = np.roots(coeffs)
    scale = np.max(np.abs(coeffs))
    real = []
    deriv = np.polyder(coeffs)
    for r in roots:
        if abs(r.imag) > 1e-9 * max(1.0, abs(r.real)):
            continue
        x = r.real
        slope = np.polyval(deriv, x)
        if slope != 0.0:
            x -= np.polyval(coeffs, x) / slope
        real.append(x)
    return np.sort(np.array(real))

"""Quantum interference model for a single membership triple.

The combined weight is predicted from the two concept weights, two
context-overlap parameters ``n``, ``n_prime`` and an interference angle
``phi``.  The parameters are tied by

    sqrt((1 - n^2)(1 - n'^2)) = n n' |r|,
    r = sqrt((1 - mu_a)(1 - mu_b)) - sqrt(mu_a mu_b),

which leaves a one-parameter family of exact fits.  :func:`fit` picks the
member needing the least interference (smallest ``|cos phi|``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .classicality import Connective, MembershipTriple
from .errors import ConstraintViolationError, SingularConfigurationError

CONSTRAINT_TOL = 1e-8
SOLVE_DENOMINATOR_TOL = 1e-12
ROUNDTRIP_TOL = 1e-9
GOLDEN_TOL = 1e-10
DEFAULT_GRID_STEPS = 1024

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class FitParameters:
    n: float
    n_prime: float
    phi_degrees: float
    r: float
    connective: Connective = Connective.DISJUNCTION

    @property
    def cos_phi(self) -> float:
        return math.cos(math.radians(self.phi_degrees))

    def constraint_residual(self) -> float:
        lhs = math.sqrt(max(0.0, (1.0 - self.n**2) * (1.0 - self.n_prime**2)))
        return abs(lhs - self.n * self.n_prime * abs(self.r))

    def mirrored(self) -> "FitParameters":
        return FitParameters(self.n_prime, self.n, self.phi_degrees, self.r, self.connective)


@dataclass(frozen=True)
class FitResult:
    params: FitParameters | None
    feasible: bool
    feasible_n_interval: tuple[float, float] | None
    predicted_mu: float | None
    residual: float | None


def compute_r(mu_a: float, mu_b: float) -> float:
    return math.sqrt((1.0 - mu_a) * (1.0 - mu_b)) - math.sqrt(mu_a * mu_b)


def nprime_from_n(n: float, r: float) -> float:
    """The n' paired with ``n`` by the overlap constraint."""
    if not 0.0 < n < 1.0:
        raise ValueError(f"n must lie in the open interval (0, 1), got {n}")
    w = 1.0 - n * n
    return math.sqrt(w / (w + n * n * r * r))


def _nprime_grid(n: np.ndarray, r: float) -> np.ndarray:
    w = 1.0 - n * n
    return np.sqrt(w / (w + n * n * r * r))


def _predict(mu_a, mu_b, n, m, cos_phi):
    s = np.sqrt(mu_a * mu_b)
    q = np.sqrt((1.0 - mu_a) * (1.0 - mu_b))
    num = n * n * mu_a + m * m * mu_b + 2.0 * n * m * s * cos_phi
    den = n * n + m * m + 2.0 * n * m * cos_phi * (s - q)
    return num, den


def predict_mu(mu_a: float, mu_b: float, params: FitParameters) -> float:
    """Combined-concept membership weight implied by the interference model."""
    num, den = _predict(mu_a, mu_b, params.n, params.n_prime, params.cos_phi)
    if abs(den) <= SOLVE_DENOMINATOR_TOL:
        raise SingularConfigurationError(f"vanishing denominator {den:.3e}")
    return float(num / den)


def predict_mu_dphi(mu_a: float, mu_b: float, params: FitParameters) -> float:
    """Analytic derivative of :func:`predict_mu` with respect to phi in degrees."""
    n, m = params.n, params.n_prime
    s = math.sqrt(mu_a * mu_b)
    q = math.sqrt((1.0 - mu_a) * (1.0 - mu_b))
    num, den = _predict(mu_a, mu_b, n, m, params.cos_phi)
    dnum_dcos = 2.0 * n * m * s
    dden_dcos = 2.0 * n * m * (s - q)
    dmu_dcos = (dnum_dcos * den - num * dden_dcos) / (den * den)
    dcos_dphi = -math.sin(math.radians(params.phi_degrees)) * math.pi / 180.0
    return float(dmu_dcos * dcos_dphi)


def _cos_phi_parts(mu_a, mu_b, mu_target, n, r):
    m = np.sqrt((1.0 - n * n) / ((1.0 - n * n) + n * n * r * r))
    s = math.sqrt(mu_a * mu_b)
    num = mu_target * (n * n + m * m) - n * n * mu_a - m * m * mu_b
    den = 2.0 * n * m * (s + r * mu_target)
    return num, den, m


def solve_cos_phi(mu_a: float, mu_b: float, mu_target: float, n: float) -> float | None:
    """cos(phi) reproducing ``mu_target`` at overlap ``n``.

    Returns None when the linear equation for cos(phi) is singular at this n.
    The result may lie outside [-1, 1]; such values mean no real angle exists.
    """
    if not 0.0 < n < 1.0:
        raise ValueError(f"n must lie in the open interval (0, 1), got {n}")
    r = compute_r(mu_a, mu_b)
    num, den, _ = _cos_phi_parts(mu_a, mu_b, mu_target, n, r)
    if abs(den) <= SOLVE_DENOMINATOR_TOL:
        return None
    return float(num / den)


def angle_degrees(cos_phi: float) -> float:
    return math.degrees(math.acos(max(-1.0, min(1.0, cos_phi))))


def _objective(t: MembershipTriple, r: float):
    def h(n: float) -> float:
        if not 0.0 < n < 1.0:
            return math.inf
        c = solve_cos_phi(t.mu_a, t.mu_b, t.mu_combined, n)
        if c is None:
            return math.inf
        _, den = _predict(t.mu_a, t.mu_b, n, nprime_from_n(n, r), c)
        if abs(den) <= SOLVE_DENOMINATOR_TOL:
            return math.inf
        return abs(c)
    return h


def golden_section(f, lo: float, hi: float, tol: float = GOLDEN_TOL) -> tuple[float, float]:
    """Minimize a unimodal ``f`` on (lo, hi); returns (argmin, min).

    Only interior points are evaluated, so open-interval objectives are safe.
    """
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


def _stationarity(t: MembershipTriple, r: float):
    """Numerator of d(cos phi)/dn along the constraint family (sign-exact)."""
    ta, tb = t.mu_combined - t.mu_a, t.mu_combined - t.mu_b

    def g(n: float) -> float:
        w = 1.0 - n * n
        m = math.sqrt(w / (w + n * n * r * r))
        mm_prime = -n * r * r / (w + n * n * r * r) ** 2
        p = n * n * ta + m * m * tb
        p_prime = 2.0 * n * ta + 2.0 * mm_prime * tb
        return p_prime * n * m - p * (m + n * mm_prime / m)
    return g


def _polish(t: MembershipTriple, r: float, lo: float, hi: float, n0: float) -> float:
    """Sharpen a golden-section estimate by root finding.

    A zero-interference point is a root of cos phi; a smooth minimum of
    |cos phi| is a root of its derivative.  Near a flat minimum golden-section
    alone only resolves n to roughly the square root of machine precision.
    """
    lo = max(lo, 1e-12)
    hi = min(hi, 1.0 - 1e-12)

    def cos_num(n: float) -> float:
        num, _, _ = _cos_phi_parts(t.mu_a, t.mu_b, t.mu_combined, n, r)
        return float(num)

    for f in (cos_num, _stationarity(t, r)):
        try:
            flo, fhi = f(lo), f(hi)
        except (ZeroDivisionError, ValueError):
            continue
        if flo == 0.0:
            return lo
        if fhi == 0.0:
            return hi
        if flo * fhi < 0.0:
            return brentq(f, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    return n0


def fit(t: MembershipTriple, grid_steps: int = DEFAULT_GRID_STEPS) -> FitResult:
    """Fit (n, n', phi) to a triple, choosing the least-interference solution.

    n is scanned on the open grid k/(grid_steps+1); the best grid point is then
    refined by golden-section search between its neighbours.  An empty
    feasible set is reported as ``feasible=False`` rather than raised.
    """
    if grid_steps < 16:
        raise ValueError("grid_steps must be at least 16")
    r = compute_r(t.mu_a, t.mu_b)
    grid = np.arange(1, grid_steps + 1) / (grid_steps + 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        num, den, m = _cos_phi_parts(t.mu_a, t.mu_b, t.mu_combined, grid, r)
        cos_phi = num / den
        _, pden = _predict(t.mu_a, t.mu_b, grid, m, cos_phi)
    ok = (np.abs(den) > SOLVE_DENOMINATOR_TOL) & (np.abs(pden) > SOLVE_DENOMINATOR_TOL)
    feasible = ok & (np.abs(cos_phi) <= 1.0)
    if not feasible.any():
        return FitResult(None, False, None, None, None)

    idx = np.flatnonzero(feasible)
    interval = (float(grid[idx[0]]), float(grid[idx[-1]]))
    best = int(idx[np.argmin(np.abs(cos_phi[idx]))])
    n_best, h_best = float(grid[best]), float(abs(cos_phi[best]))

    lo = float(grid[best - 1]) if best > 0 else 0.0
    hi = float(grid[best + 1]) if best + 1 < grid_steps else 1.0
    objective = _objective(t, r)
    n_ref, h_ref = golden_section(objective, lo, hi)
    n_pol = _polish(t, r, lo, hi, n_ref)
    h_pol = objective(n_pol)
    # the polished point is the exact minimizer; accept it up to rounding noise
    if h_pol <= h_ref + 1e-12:
        n_ref, h_ref = n_pol, h_pol
    if h_ref <= h_best + 1e-12 and math.isfinite(h_ref):
        n_best = n_ref

    c = solve_cos_phi(t.mu_a, t.mu_b, t.mu_combined, n_best)
    params = FitParameters(n_best, nprime_from_n(n_best, r), angle_degrees(c), r, t.connective)
    predicted = predict_mu(t.mu_a, t.mu_b, params)
    return FitResult(params, True, interval, predicted, abs(predicted - t.mu_combined))


def check_constraint(params: FitParameters, tol: float = CONSTRAINT_TOL) -> None:
    residual = params.constraint_residual()
    if residual > tol:
        raise ConstraintViolationError(f"overlap constraint violated by {residual:.3e}")


def parameters_at(t: MembershipTriple, n: float) -> FitParameters | None:
    """Exact parameters on the fit family at a chosen ``n``, or None if no real angle exists."""
    r = compute_r(t.mu_a, t.mu_b)
    c = solve_cos_phi(t.mu_a, t.mu_b, t.mu_combined, n)
    if c is None or abs(c) > 1.0:
        return None
    return FitParameters(n, nprime_from_n(n, r), angle_degrees(c), r, t.connective)

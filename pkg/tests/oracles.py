"""Independent oracles used to derive or check expected values."""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


def solve_exact(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan elimination over the rationals; None if singular."""
    n = len(a)
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def four_atom_feasible(mu_a: Fraction, mu_b: Fraction, mu_combined: Fraction, conjunction: bool) -> bool:
    """Does a probability space on atoms AB, AB', A'B, A'B' reproduce the weights?

    Unknowns are the four atom masses; the three weights plus normalization
    pin them down uniquely, so feasibility is nonnegativity of the solution.
    """
    combined_row = [1, 0, 0, 0] if conjunction else [1, 1, 1, 0]
    a = [[Fraction(x) for x in row] for row in (
        [1, 1, 0, 0],   # mu(A) = AB + AB'
        [1, 0, 1, 0],   # mu(B) = AB + A'B
        combined_row,
        [1, 1, 1, 1],
    )]
    masses = solve_exact(a, [mu_a, mu_b, mu_combined, Fraction(1)])
    assert masses is not None
    return all(x >= 0 for x in masses)


def eq7_direct(mu_a, mu_b, n, n_prime, phi_degrees):
    """Combined weight written out term by term from the interference model."""
    c = math.cos(math.radians(phi_degrees))
    top = n**2 * mu_a + n_prime**2 * mu_b + 2 * n * n_prime * math.sqrt(mu_a * mu_b) * c
    bottom = n**2 + n_prime**2 + 2 * n * n_prime * c * (math.sqrt(mu_a * mu_b) - math.sqrt((1 - mu_a) * (1 - mu_b)))
    return top / bottom


def brute_force_reachable(mu_a, mu_b, target, n_points=400, phi_points=721):
    """Smallest |prediction - target| over a dense (n, phi) grid on the constraint curve."""
    r = math.sqrt((1 - mu_a) * (1 - mu_b)) - math.sqrt(mu_a * mu_b)
    best = math.inf
    for n in np.linspace(0.001, 0.999, n_points):
        w = 1 - n * n
        n_prime = math.sqrt(w / (w + n * n * r * r))
        for phi in np.linspace(0.0, 180.0, phi_points):
            best = min(best, abs(eq7_direct(mu_a, mu_b, n, n_prime, phi) - target))
    return best

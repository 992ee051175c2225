"""Small dense complex linear algebra: states, projectors, Born rule, collapse.

Vectors and operators are plain ``numpy`` arrays of dtype ``complex128``.
Every function returns a fresh array and never mutates its arguments.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import (
    DegenerateStateError,
    DimensionMismatchError,
    ImpossibleOutcomeError,
    NotOrthogonalError,
    NotProjectorError,
)

STRUCTURAL_TOL = 1e-10
ARITHMETIC_TOL = 1e-12
ORTHOGONALITY_TOL = 1e-8


def as_state(components) -> np.ndarray:
    v = np.asarray(components, dtype=np.complex128)
    if v.ndim != 1 or v.size == 0:
        raise DimensionMismatchError(f"state must be a nonempty 1-d array, got shape {v.shape}")
    return v.copy()


def as_operator(entries) -> np.ndarray:
    m = np.asarray(entries, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"operator must be square, got shape {m.shape}")
    return m.copy()


def basis_vector(d: int, k: int) -> np.ndarray:
    e = np.zeros(d, dtype=np.complex128)
    e[k] = 1.0
    return e


def diagonal_projector(diag: Sequence[int]) -> np.ndarray:
    """Projector onto the span of the basis vectors flagged with 1."""
    flags = np.asarray(diag)
    if not np.all((flags == 0) | (flags == 1)):
        raise NotProjectorError(f"diagonal projector needs 0/1 entries, got {list(diag)}")
    return np.diag(flags.astype(np.complex128))


def identity(d: int) -> np.ndarray:
    return np.eye(d, dtype=np.complex128)


def null_operator(d: int) -> np.ndarray:
    return np.zeros((d, d), dtype=np.complex128)


def _check_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatchError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")


def inner_product(bra, ket) -> complex:
    """<bra|ket>, anti-linear in ``bra`` and linear in ``ket``."""
    bra, ket = as_state(bra), as_state(ket)
    _check_same_dim(bra, ket)
    return complex(np.vdot(bra, ket))


def norm(v) -> float:
    v = as_state(v)
    return float(np.sqrt(np.real(np.vdot(v, v))))


def is_unit(v, tol: float = STRUCTURAL_TOL) -> bool:
    return abs(norm(v) - 1.0) <= tol


def normalize(v) -> np.ndarray:
    v = as_state(v)
    length = norm(v)
    if length == 0.0:
        raise DegenerateStateError("cannot normalize the zero vector")
    return v / length


def superpose(a, b, tol: float = ORTHOGONALITY_TOL) -> np.ndarray:
    """Equal-weight superposition (a + b)/sqrt(2) of two orthonormal states."""
    a, b = as_state(a), as_state(b)
    _check_same_dim(a, b)
    if not (is_unit(a, tol) and is_unit(b, tol)):
        raise NotOrthogonalError("superpose needs unit vectors")
    overlap = abs(inner_product(a, b))
    if overlap > tol:
        raise NotOrthogonalError(f"states overlap by {overlap:.3e}; 1/sqrt(2) normalization invalid")
    return (a + b) / np.sqrt(2.0)


def is_projector(m, tol: float = STRUCTURAL_TOL) -> bool:
    m = as_operator(m)
    hermitian = np.max(np.abs(m - m.conj().T), initial=0.0) <= tol
    idempotent = np.max(np.abs(m @ m - m), initial=0.0) <= tol
    return bool(hermitian and idempotent)


def commutator_residual(m, n) -> float:
    m, n = as_operator(m), as_operator(n)
    if m.shape != n.shape:
        raise DimensionMismatchError(f"operator shapes differ: {m.shape} vs {n.shape}")
    return float(np.max(np.abs(m @ n - n @ m), initial=0.0))


def commutes(m, n, tol: float = STRUCTURAL_TOL) -> bool:
    return commutator_residual(m, n) <= tol


def validate_spectral_family(family: Sequence, tol: float = STRUCTURAL_TOL) -> bool:
    """True iff the operators are projectors, mutually orthogonal, and sum to the identity."""
    if len(family) == 0:
        return False
    ops = [as_operator(m) for m in family]
    d = ops[0].shape[0]
    if any(m.shape != (d, d) for m in ops):
        return False
    if not all(is_projector(m, tol) for m in ops):
        return False
    for i, mi in enumerate(ops):
        for mj in ops[i + 1:]:
            if np.max(np.abs(mi @ mj)) > tol:
                return False
    return bool(np.max(np.abs(sum(ops) - identity(d))) <= tol)


def _require_projector(m: np.ndarray, state: np.ndarray) -> None:
    if m.shape[0] != state.shape[0]:
        raise DimensionMismatchError(f"operator acts on dimension {m.shape[0]}, state has {state.shape[0]}")
    if not is_projector(m):
        raise NotProjectorError("operator is not an orthogonal projector")


def born_probability(state, m) -> float:
    """Probability <A|M|A> = ||M|A>||^2 of the outcome carried by projector ``m``."""
    state, m = as_state(state), as_operator(m)
    _require_projector(m, state)
    projected = m @ state
    return float(np.real(np.vdot(projected, projected)))


def collapse(state, m) -> np.ndarray:
    """Post-measurement state M|A>/||M|A>||."""
    state, m = as_state(state), as_operator(m)
    _require_projector(m, state)
    projected = m @ state
    length = norm(projected)
    if length == 0.0:
        raise ImpossibleOutcomeError("state is orthogonal to the range of the projector")
    return projected / length


def polar(z: complex) -> tuple[float, float]:
    """(modulus, argument in radians) of a complex number."""
    return abs(z), float(np.angle(z))

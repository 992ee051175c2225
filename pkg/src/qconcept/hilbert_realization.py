"""Explicit C^3 realization of a fitted concept pair.

The decision projector is M = diag(1, 0, 0) and the item-context projector
N = diag(1, 1, 0).  With these choices

    |A> = (n sqrt(mu_a), n sqrt(1 - mu_a), sqrt(1 - n^2))
    |B> = e^{i phi} (n' sqrt(mu_b), -n' sqrt(1 - mu_b), tau sqrt(1 - n'^2))

with tau = sign(r) are orthogonal exactly when the overlap constraint holds.
Weights are then evaluated through projection, normalization and the Born
rule, independently of the closed-form prediction in ``interference_fit``.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import qlinalg
from .classicality import MembershipTriple
from .errors import ImpossibleOutcomeError, NotOrthogonalError, NotProjectorError
from .interference_fit import FitParameters, check_constraint


class Target(enum.Enum):
    A = "A"
    B = "B"
    COMBINED = "Combined"


DECISION_PROJECTOR = qlinalg.diagonal_projector([1, 0, 0])
CONTEXT_PROJECTOR = qlinalg.diagonal_projector([1, 1, 0])


@dataclass(frozen=True, eq=False)
class ConceptPairModel:
    vec_a: np.ndarray
    vec_b: np.ndarray
    m_proj: np.ndarray = field(default_factory=lambda: DECISION_PROJECTOR.copy())
    n_proj: np.ndarray = field(default_factory=lambda: CONTEXT_PROJECTOR.copy())
    phi_degrees: float = 0.0

    def __post_init__(self):
        for name in ("vec_a", "vec_b"):
            object.__setattr__(self, name, qlinalg.as_state(getattr(self, name)))
        for name in ("m_proj", "n_proj"):
            object.__setattr__(self, name, qlinalg.as_operator(getattr(self, name)))
        if not (qlinalg.is_unit(self.vec_a) and qlinalg.is_unit(self.vec_b)):
            raise NotOrthogonalError("concept states must be unit vectors")
        overlap = abs(qlinalg.inner_product(self.vec_a, self.vec_b))
        if overlap > qlinalg.ORTHOGONALITY_TOL:
            raise NotOrthogonalError(f"concept states overlap by {overlap:.3e}")
        if not (qlinalg.is_projector(self.m_proj) and qlinalg.is_projector(self.n_proj)):
            raise NotProjectorError("M and N must be orthogonal projectors")
        if not qlinalg.commutes(self.m_proj, self.n_proj):
            raise NotProjectorError("M and N must commute")

    def state(self, target: Target) -> np.ndarray:
        if target is Target.A:
            return self.vec_a
        if target is Target.B:
            return self.vec_b
        return qlinalg.superpose(self.vec_a, self.vec_b)

    def to_dict(self) -> dict:
        return {
            "vec_a": _components(self.vec_a),
            "vec_b": _components(self.vec_b),
            "phi_degrees": self.phi_degrees,
            "m_diagonal": [float(x) for x in np.real(np.diag(self.m_proj))],
            "n_diagonal": [float(x) for x in np.real(np.diag(self.n_proj))],
        }


def _components(v: np.ndarray) -> list[dict]:
    return [{"re": float(z.real), "im": float(z.imag)} for z in v]


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def build_model(params: FitParameters, mu_a: float, mu_b: float) -> ConceptPairModel:
    """Concept vectors and projectors realizing ``params`` for the given weights."""
    check_constraint(params)
    n, m = params.n, params.n_prime
    tau = _sign(params.r)
    vec_a = np.array([n * math.sqrt(mu_a), n * math.sqrt(1.0 - mu_a), math.sqrt(max(0.0, 1.0 - n * n))],
                     dtype=np.complex128)
    phase = cmath.exp(1j * math.radians(params.phi_degrees))
    vec_b = phase * np.array([m * math.sqrt(mu_b), -m * math.sqrt(1.0 - mu_b),
                              tau * math.sqrt(max(0.0, 1.0 - m * m))], dtype=np.complex128)
    return ConceptPairModel(vec_a, vec_b, phi_degrees=params.phi_degrees)


def contextualized_weight(model: ConceptPairModel, target: Target) -> float:
    """Membership weight of ``target`` after the item context acts.

    Collapses the target state onto the range of N, then applies the Born
    rule with M: <psi|NMN|psi> / <psi|N|psi>.
    """
    psi = model.state(target)
    try:
        in_context = qlinalg.collapse(psi, model.n_proj)
    except ImpossibleOutcomeError:
        raise ImpossibleOutcomeError(f"{target.value} state has no component in the item context") from None
    return qlinalg.born_probability(in_context, model.m_proj)


@dataclass(frozen=True)
class VerificationReport:
    weights: dict[str, float]
    deviations: dict[str, float]
    unit_residuals: dict[str, float]
    orthogonality_residual: float
    commutation_residual: float
    tolerance: float
    passed: bool
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "weights": self.weights,
            "deviations": self.deviations,
            "unit_residuals": self.unit_residuals,
            "orthogonality_residual": self.orthogonality_residual,
            "commutation_residual": self.commutation_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "error": self.error,
        }


def verify_model(model: ConceptPairModel, t: MembershipTriple, tol: float = 1e-3) -> VerificationReport:
    """Compare the model's three contextualized weights with measured data."""
    measured = {"A": t.mu_a, "B": t.mu_b, "Combined": t.mu_combined}
    weights: dict[str, float] = {}
    error = None
    try:
        for target in Target:
            weights[target.value] = contextualized_weight(model, target)
    except ImpossibleOutcomeError as exc:
        error = str(exc)
    deviations = {k: abs(w - measured[k]) for k, w in weights.items()}
    unit = {
        "A": abs(qlinalg.norm(model.vec_a) - 1.0),
        "B": abs(qlinalg.norm(model.vec_b) - 1.0),
    }
    ortho = abs(qlinalg.inner_product(model.vec_a, model.vec_b))
    comm = qlinalg.commutator_residual(model.m_proj, model.n_proj)
    passed = (
        error is None
        and all(d <= tol for d in deviations.values())
        and all(u <= qlinalg.STRUCTURAL_TOL for u in unit.values())
        and ortho <= qlinalg.ORTHOGONALITY_TOL
        and comm <= qlinalg.STRUCTURAL_TOL
    )
    return VerificationReport(weights, deviations, unit, ortho, comm, tol, passed, error)

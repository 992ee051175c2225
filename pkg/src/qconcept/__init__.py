"""Classicality audits and quantum interference models for concept combination data."""

__version__ = "0.1.0"

from .classicality import (  # noqa: E402
    ClassicalityVerdict,
    Connective,
    ExtensionClass,
    MembershipTriple,
    classify,
    conjunction_deficits,
    disjunction_deficits,
)
from .interference_fit import (  # noqa: E402
    FitParameters,
    FitResult,
    compute_r,
    fit,
    nprime_from_n,
    predict_mu,
    solve_cos_phi,
)
from .hilbert_realization import (  # noqa: E402
    ConceptPairModel,
    Target,
    build_model,
    contextualized_weight,
    verify_model,
)

__all__ = [
    "ClassicalityVerdict",
    "ConceptPairModel",
    "Connective",
    "ExtensionClass",
    "FitParameters",
    "FitResult",
    "MembershipTriple",
    "Target",
    "build_model",
    "classify",
    "compute_r",
    "conjunction_deficits",
    "contextualized_weight",
    "disjunction_deficits",
    "fit",
    "nprime_from_n",
    "predict_mu",
    "solve_cos_phi",
    "verify_model",
]

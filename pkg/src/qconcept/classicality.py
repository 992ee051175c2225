"""Kolmogorovian representability and Hampton-style extension classes.

Weights are interpreted through their shortest decimal representation
(``repr``), so deficits such as 0.90 - 0.81 come out as exactly 0.09
rather than carrying binary rounding noise.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConnectiveError


class Connective(enum.Enum):
    CONJUNCTION = "and"
    DISJUNCTION = "or"

    @classmethod
    def parse(cls, text: str) -> "Connective":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ConnectiveError(f"unknown connective {text!r}; expected 'and' or 'or'") from None


class ExtensionClass(enum.Enum):
    CLASSICAL = "Classical"
    OVEREXTENDED = "Overextended"
    DOUBLE_OVEREXTENDED = "DoubleOverextended"
    UNDEREXTENDED = "Underextended"
    DOUBLE_UNDEREXTENDED = "DoubleUnderextended"


@dataclass(frozen=True)
class MembershipTriple:
    item: str
    concept_a: str
    concept_b: str
    connective: Connective
    mu_a: float
    mu_b: float
    mu_combined: float

    def __post_init__(self):
        if not isinstance(self.connective, Connective):
            object.__setattr__(self, "connective", Connective.parse(str(self.connective)))
        for name in ("mu_a", "mu_b", "mu_combined"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name}={value} outside [0, 1]")

    @property
    def key(self) -> tuple[str, str, str, Connective]:
        return (self.item, self.concept_a, self.concept_b, self.connective)

    def swapped(self) -> "MembershipTriple":
        """Same data with the roles of the two concepts exchanged."""
        return MembershipTriple(self.item, self.concept_b, self.concept_a, self.connective,
                                self.mu_b, self.mu_a, self.mu_combined)


@dataclass(frozen=True)
class ClassicalityVerdict:
    deficit_1: float
    deficit_2: float
    kolmogorovian: bool
    extension_class: ExtensionClass


def exact(x: float) -> Fraction:
    return Fraction(repr(float(x)))


def _exact_weights(t: MembershipTriple) -> tuple[Fraction, Fraction, Fraction]:
    return exact(t.mu_a), exact(t.mu_b), exact(t.mu_combined)


def _conjunction_deficits_exact(t: MembershipTriple) -> tuple[Fraction, Fraction]:
    if t.connective is not Connective.CONJUNCTION:
        raise ConnectiveError(f"{t.item}: conjunction deficits need an 'and' triple")
    a, b, ab = _exact_weights(t)
    return ab - min(a, b), a + b - ab - 1


def _disjunction_deficits_exact(t: MembershipTriple) -> tuple[Fraction, Fraction]:
    if t.connective is not Connective.DISJUNCTION:
        raise ConnectiveError(f"{t.item}: disjunction deficits need an 'or' triple")
    a, b, a_or_b = _exact_weights(t)
    return max(a, b) - a_or_b, a + b - a_or_b


def conjunction_deficits(t: MembershipTriple) -> tuple[float, float]:
    """Slacks of the two conjunction inequalities.

    The first is positive when the minimum rule of fuzzy conjunction fails.
    The triple is classically representable iff both are <= 0.
    """
    d1, d2 = _conjunction_deficits_exact(t)
    return float(d1), float(d2)


def disjunction_deficits(t: MembershipTriple) -> tuple[float, float]:
    """Slacks of the two disjunction inequalities.

    The first is positive when the maximum rule of fuzzy disjunction fails.
    Representable iff the first is <= 0 and the second is >= 0.
    """
    d1, d2 = _disjunction_deficits_exact(t)
    return float(d1), float(d2)


def classify(t: MembershipTriple) -> ClassicalityVerdict:
    a, b, combined = _exact_weights(t)
    if t.connective is Connective.CONJUNCTION:
        d1, d2 = _conjunction_deficits_exact(t)
        kolmogorovian = d1 <= 0 and d2 <= 0
        if combined > max(a, b):
            cls = ExtensionClass.DOUBLE_OVEREXTENDED
        elif combined > min(a, b):
            cls = ExtensionClass.OVEREXTENDED
        else:
            cls = ExtensionClass.CLASSICAL
    else:
        d1, d2 = _disjunction_deficits_exact(t)
        kolmogorovian = d1 <= 0 and d2 >= 0
        if combined < min(a, b):
            cls = ExtensionClass.DOUBLE_UNDEREXTENDED
        elif combined < max(a, b):
            cls = ExtensionClass.UNDEREXTENDED
        else:
            cls = ExtensionClass.CLASSICAL
    return ClassicalityVerdict(float(d1), float(d2), kolmogorovian, cls)

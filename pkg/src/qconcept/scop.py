"""Operational state/context description of a conceptual entity.

An entity is a finite table of transition probabilities: for each
(source state, context) pair, a probability distribution over the states
the entity may end up in.  A membership weight is the probability of the
two-step path item-context then decision-context.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import InvalidDistributionError, UnknownLabelError

DISTRIBUTION_TOL = 1e-10


@dataclass(frozen=True)
class ScopEntity:
    states: frozenset[str]
    contexts: frozenset[str]
    transitions: Mapping[tuple[str, str], Mapping[str, float]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "contexts", frozenset(self.contexts))
        frozen = {}
        for (source, context), dist in self.transitions.items():
            self._check_state(source)
            self._check_context(context)
            for target, p in dist.items():
                self._check_state(target)
                if p < 0.0 or not math.isfinite(p):
                    raise InvalidDistributionError(f"negative or non-finite probability {p} at ({source}, {context})")
            total = math.fsum(dist.values())
            if abs(total - 1.0) > DISTRIBUTION_TOL:
                raise InvalidDistributionError(f"distribution at ({source}, {context}) sums to {total}")
            frozen[(source, context)] = MappingProxyType(dict(dist))
        object.__setattr__(self, "transitions", MappingProxyType(frozen))

    def _check_state(self, label: str) -> None:
        if label not in self.states:
            raise UnknownLabelError(f"unknown state {label!r}")

    def _check_context(self, label: str) -> None:
        if label not in self.contexts:
            raise UnknownLabelError(f"unknown context {label!r}")

    def distribution(self, source: str, context: str) -> Mapping[str, float]:
        self._check_state(source)
        self._check_context(context)
        try:
            return self.transitions[(source, context)]
        except KeyError:
            raise UnknownLabelError(f"no transition defined for context {context!r} at state {source!r}") from None

    def is_deterministic(self, source: str, context: str) -> bool:
        dist = self.distribution(source, context)
        return sum(1 for p in dist.values() if p > 0.0) == 1


def transition_probability(entity: ScopEntity, target: str, context: str, source: str) -> float:
    """Probability that ``context`` changes ``source`` into ``target``."""
    entity._check_state(target)
    return float(entity.distribution(source, context).get(target, 0.0))


def membership_weight(entity: ScopEntity, p_a: str, e_x: str, p_x: str, e: str, p: str) -> float:
    """mu(p_x, e_x, p_a) * mu(p, e, p_x): item context first, then the decision."""
    return transition_probability(entity, p_x, e_x, p_a) * transition_probability(entity, p, e, p_x)


def sample_outcomes(entity: ScopEntity, source: str, context: str, count: int, seed: int) -> dict[str, int]:
    """Seeded draws from one transition distribution, as outcome counts."""
    if count < 1:
        raise ValueError("count must be at least 1")
    dist = entity.distribution(source, context)
    targets = sorted(dist)
    probs = np.array([dist[k] for k in targets], dtype=float)
    rng = np.random.default_rng(seed)
    draws = rng.choice(len(targets), size=count, p=probs / probs.sum())
    tally = Counter(draws.tolist())
    return {targets[i]: tally.get(i, 0) for i in range(len(targets))}


def relative_frequencies(counts: Mapping[str, int]) -> dict[str, float]:
    total = sum(counts.values())
    return {k: v / total for k, v in counts.items()}


def decision_entity(weights: Mapping[str, float]) -> ScopEntity:
    """Two-step entity for membership judgments of one item.

    For each concept label ``c`` in ``weights`` there is a prepared state
    ``c``, a deterministic item context moving it to ``c|X``, and a shared
    decision context ``e`` sending ``c|X`` to ``yes`` with probability
    ``weights[c]``.
    """
    states = {"yes", "no"}
    transitions: dict[tuple[str, str], dict[str, float]] = {}
    for concept, w in weights.items():
        contextual = f"{concept}|X"
        states.update({concept, contextual})
        transitions[(concept, "e_X")] = {contextual: 1.0}
        transitions[(contextual, "e")] = {"yes": w, "no": 1.0 - w}
    return ScopEntity(frozenset(states), frozenset({"e_X", "e"}), transitions)


def entity_from_model(model) -> ScopEntity:
    """Decision entity whose probabilities are Born weights of a C^3 model."""
    from .hilbert_realization import Target, contextualized_weight

    return decision_entity({t.value: contextualized_weight(model, t) for t in Target})


def sample_membership(entity: ScopEntity, concept: str, count: int, seed: int) -> float:
    """Relative frequency of ``yes`` over ``count`` simulated participants."""
    contextual = f"{concept}|X"
    if not entity.is_deterministic(concept, "e_X"):
        raise InvalidDistributionError("item context must be deterministic for direct sampling")
    counts = sample_outcomes(entity, contextual, "e", count, seed)
    return counts.get("yes", 0) / count

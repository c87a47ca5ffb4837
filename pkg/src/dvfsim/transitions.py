"""Frequency-transition planning and the transition-shock wear model.

A direct transition jumps straight to the target level; a stepped transition
walks the ladder one adjacent level at a time, optionally dwelling at each
intermediate level. Each hop shocks the component in proportion to a power of
the frequency jump, so for a shock exponent above 1 splitting a large jump into
small steps strictly reduces the total shock wear.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import DomainError, UnknownLevelError

if TYPE_CHECKING:
    from .power import FrequencyLevel, ProcessorSpec

POLICY_KINDS = ("direct", "stepped")


@dataclass(frozen=True)
class TransitionPolicy:
    """How to move between ladder levels: kind is "direct" or "stepped".

    ``dwell`` is the time in seconds spent operating at each intermediate level
    of a stepped transition (the final hop resumes normal operation at once).
    """

    kind: str
    dwell: float = 0.0


@dataclass(frozen=True)
class Hop:
    from_level: FrequencyLevel
    to_level: FrequencyLevel
    delta_f: float
    dwell_after: float


@dataclass(frozen=True)
class TransitionPlan:
    """Chained hops; empty when source and target coincide."""

    hops: tuple[Hop, ...]


@dataclass(frozen=True)
class WearParams:
    """Shock-wear model: wear per hop = k_shock * (delta_f / f_span)^alpha.

    f_span normalizes delta_f so k_shock is the wear fraction of one full-span
    jump regardless of the ladder's absolute frequencies; alpha >= 1 sets how
    strongly large jumps are penalized (alpha = 1 makes stepping neutral).
    """

    k_shock: float
    alpha: float
    f_span: float


def full_span(levels: tuple[FrequencyLevel, ...]) -> float:
    """Default wear normalization: frequency distance across the whole ladder."""
    return levels[-1].freq - levels[0].freq


def _level_in_spec(spec: ProcessorSpec, level: FrequencyLevel) -> None:
    if not (0 <= level.index < len(spec.levels)) or spec.levels[level.index] != level:
        raise UnknownLevelError(f"level {level} is not part of this processor spec")


def plan_transition(
    spec: ProcessorSpec,
    from_level: FrequencyLevel,
    to_level: FrequencyLevel,
    policy: TransitionPolicy,
) -> TransitionPlan:
    """Build the hop sequence for moving between two ladder levels.

    direct: one hop covering the whole jump, no dwell. stepped: one hop per
    adjacent ladder level, dwelling ``policy.dwell`` seconds after every hop
    except the last. Same source and target yield an empty plan.
    """
    _level_in_spec(spec, from_level)
    _level_in_spec(spec, to_level)
    if from_level == to_level:
        return TransitionPlan(())
    if policy.kind == "direct":
        hop = Hop(from_level, to_level, abs(to_level.freq - from_level.freq), 0.0)
        return TransitionPlan((hop,))
    if policy.kind == "stepped":
        step = 1 if to_level.index > from_level.index else -1
        hops = []
        for i in range(from_level.index, to_level.index, step):
            a = spec.levels[i]
            b = spec.levels[i + step]
            last = b == to_level
            hops.append(Hop(a, b, abs(b.freq - a.freq), 0.0 if last else policy.dwell))
        return TransitionPlan(tuple(hops))
    raise DomainError(f"unknown transition policy kind {policy.kind!r}")


def shock_wear(params: WearParams, delta_f: float) -> float:
    """Wear fraction of a single frequency jump of magnitude delta_f (Hz)."""
    if delta_f < 0:
        raise DomainError(f"delta_f must be >= 0 (got {delta_f})")
    return params.k_shock * (delta_f / params.f_span) ** params.alpha


def plan_wear(params: WearParams, plan: TransitionPlan) -> float:
    """Total shock wear of a plan: sum of per-hop shock wear in hop order."""
    total = 0.0
    for hop in plan.hops:
        total += shock_wear(params, hop.delta_f)
    return total

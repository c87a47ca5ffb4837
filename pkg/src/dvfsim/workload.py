"""Deadline-constrained tasks and per-task frequency-selection governors.

Work is measured in processor cycles, so execution time is cycles/frequency and
lowering the frequency stretches a task into its slack. The governor picks one
level per task at its start; there is no mid-task re-selection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InfeasibleError
from .power import FrequencyLevel, ProcessorSpec, task_energy

GOVERNOR_KINDS = ("lowest_feasible", "min_energy", "fixed")


@dataclass(frozen=True)
class Task:
    """Work item: cycles > 0, arrival >= 0, absolute deadline > arrival (seconds)."""

    id: str
    cycles: float
    arrival: float
    deadline: float


@dataclass(frozen=True)
class GovernorPolicy:
    """Frequency selection rule; ``fixed_index`` applies only to kind "fixed"."""

    kind: str
    fixed_index: int | None = None


def execution_time(task: Task, level: FrequencyLevel) -> float:
    """Seconds to run the task's cycles at the level's clock."""
    return task.cycles / level.freq


def _required_hz(task: Task, window: float) -> float:
    return task.cycles / window if window > 0 else math.inf


def lowest_feasible_level(spec: ProcessorSpec, task: Task, start: float) -> FrequencyLevel:
    """Slowest ladder level that still meets the deadline from ``start``."""
    if start < task.arrival:
        raise DomainError(f"start {start} precedes arrival {task.arrival}")
    window = task.deadline - start
    for level in spec.levels:
        if execution_time(task, level) <= window:
            return level
    raise InfeasibleError(task.id, _required_hz(task, window))


def min_energy_level(spec: ProcessorSpec, task: Task, start: float) -> FrequencyLevel:
    """Feasible level minimizing energy over the deadline window; ties go low.

    Energy charges active power for the execution time and idle power for the
    remainder of the window, so with nonzero device or idle power racing to a
    higher level and idling can beat stretching.
    """
    if start < task.arrival:
        raise DomainError(f"start {start} precedes arrival {task.arrival}")
    window = task.deadline - start
    best = None
    best_energy = math.inf
    for level in spec.levels:
        t_run = execution_time(task, level)
        if t_run > window:
            continue
        energy = task_energy(spec, level, t_run, window - t_run).total_j
        if energy < best_energy:
            best = level
            best_energy = energy
    if best is None:
        raise InfeasibleError(task.id, _required_hz(task, window))
    return best


def select_level(spec: ProcessorSpec, task: Task, start: float, governor: GovernorPolicy) -> FrequencyLevel:
    """Dispatch to the governor's selection rule. Raises InfeasibleError like the rules do."""
    if governor.kind == "fixed":
        if governor.fixed_index is None or not (0 <= governor.fixed_index < len(spec.levels)):
            raise DomainError(f"fixed governor index {governor.fixed_index} outside ladder")
        return spec.levels[governor.fixed_index]
    if governor.kind == "lowest_feasible":
        return lowest_feasible_level(spec, task, start)
    if governor.kind == "min_energy":
        return min_energy_level(spec, task, start)
    raise DomainError(f"unknown governor kind {governor.kind!r}")

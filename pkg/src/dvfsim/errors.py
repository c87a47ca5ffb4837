"""Exception types shared across the simulator."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the operation's valid domain."""


class UnknownLevelError(DomainError):
    """A frequency level does not belong to the processor spec it was used with."""


class InfeasibleError(Exception):
    """No frequency level can meet the task's deadline from the given start time.

    ``required_hz`` is the minimum frequency that would have met the deadline
    (``inf`` when the window is already closed).
    """

    def __init__(self, task_id: str, required_hz: float):
        self.task_id = task_id
        self.required_hz = required_hz
        super().__init__(f"task {task_id!r} infeasible: needs >= {required_hz:g} Hz")


class ScenarioError(Exception):
    """A scenario failed parsing, schema checking, or semantic validation.

    ``kind`` is one of "parse", "schema", "validation"; ``problems`` lists every
    individual issue found, not just the first.
    """

    def __init__(self, kind: str, problems: list[str] | tuple[str, ...]):
        self.kind = kind
        self.problems = tuple(problems)
        super().__init__(f"{kind} error: " + "; ".join(self.problems))


class PolicyRunError(RuntimeError):
    """A policy-comparison run failed; carries which policy was being simulated."""

    def __init__(self, policy_label: str, cause: Exception):
        self.policy_label = policy_label
        super().__init__(f"simulation failed for policy '{policy_label}': {cause}")

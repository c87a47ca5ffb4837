"""Frequency/voltage ladder of a DVFS processor and its power/energy model.

Active power at an operating point is ``coeff_a*f*vdd^2 + coeff_b*vdd + p_device``
(dynamic switching term, supply-linear term, frequency-independent device draw);
idle power is a single level-independent constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, UnknownLevelError
from .thermal import ThermalParams
from .transitions import WearParams

DEFAULT_COST_RATE = 100.0  # $/MWh


@dataclass(frozen=True)
class FrequencyLevel:
    """One discrete operating point: 0-based ladder index, clock in Hz, supply in V."""

    index: int
    freq: float
    vdd: float


@dataclass(frozen=True)
class ProcessorSpec:
    """Ladder of operating points plus power, thermal, and wear parameters.

    Levels must be strictly increasing in both frequency and supply voltage;
    coefficients are in W/(Hz*V^2), W/V, W, W respectively.
    """

    levels: tuple[FrequencyLevel, ...]
    coeff_a: float
    coeff_b: float
    p_device: float
    p_idle: float
    thermal: ThermalParams
    wear: WearParams


@dataclass(frozen=True)
class EnergyBreakdown:
    """Joules split into active (task executing) and idle portions."""

    active_j: float
    idle_j: float

    @property
    def total_j(self) -> float:
        return self.active_j + self.idle_j


@dataclass(frozen=True)
class Violation:
    field: str
    rule: str

    def __str__(self) -> str:
        return f"{self.field}: {self.rule}"


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _finite(x) -> bool:
    return isinstance(x, (int, float)) and math.isfinite(x)


def validate_spec(spec: ProcessorSpec) -> ValidationResult:
    """Check every ProcessorSpec invariant, returning all violations found.

    Violations are collected rather than raised so a scenario author sees the
    full list in one pass.
    """
    v: list[Violation] = []

    if len(spec.levels) < 2:
        v.append(Violation("levels", "ladder needs at least 2 levels"))
    for i, lv in enumerate(spec.levels):
        if lv.index != i:
            v.append(Violation(f"levels[{i}].index", f"index must equal ladder position (got {lv.index})"))
        if not _finite(lv.freq) or lv.freq <= 0:
            v.append(Violation(f"levels[{i}].freq", "frequency must be finite and > 0"))
        if not _finite(lv.vdd) or lv.vdd <= 0:
            v.append(Violation(f"levels[{i}].vdd", "voltage must be finite and > 0"))
    for i in range(1, len(spec.levels)):
        lo, hi = spec.levels[i - 1], spec.levels[i]
        if hi.freq == lo.freq:
            v.append(Violation(f"levels[{i}].freq", "duplicate frequency"))
        elif hi.freq < lo.freq:
            v.append(Violation(f"levels[{i}].freq", "ladder not strictly increasing in frequency"))
        if hi.vdd <= lo.vdd:
            v.append(Violation(f"levels[{i}].vdd", "ladder not strictly increasing in voltage"))

    for name in ("coeff_a", "coeff_b", "p_device", "p_idle"):
        value = getattr(spec, name)
        if not _finite(value):
            v.append(Violation(name, "must be a finite number"))
        elif value < 0:
            v.append(Violation(name, "negative coefficient"))

    # Strictly rising active power is what makes "slower is cheaper" meaningful.
    if not v:
        powers = [active_power(spec, lv) for lv in spec.levels]
        for i in range(1, len(powers)):
            if powers[i] <= powers[i - 1]:
                v.append(Violation("levels", "active power not strictly increasing across levels"))
                break

    th = spec.thermal
    if not _finite(th.r_th) or th.r_th <= 0:
        v.append(Violation("thermal.r_th", "must be finite and > 0"))
    if not _finite(th.c_th) or th.c_th <= 0:
        v.append(Violation("thermal.c_th", "must be finite and > 0"))
    if not _finite(th.t_amb):
        v.append(Violation("thermal.t_amb", "must be a finite number"))
    if not _finite(th.t_ref):
        v.append(Violation("thermal.t_ref", "must be a finite number"))
    if not _finite(th.l_base) or th.l_base <= 0:
        v.append(Violation("thermal.l_base", "must be finite and > 0"))

    w = spec.wear
    if not _finite(w.k_shock) or w.k_shock < 0:
        v.append(Violation("wear.k_shock", "must be finite and >= 0"))
    if not _finite(w.alpha) or w.alpha < 1:
        v.append(Violation("wear.alpha", "must be finite and >= 1"))
    if not _finite(w.f_span) or w.f_span <= 0:
        v.append(Violation("wear.f_span", "must be finite and > 0"))

    return ValidationResult(tuple(v))


def _require_level(spec: ProcessorSpec, level: FrequencyLevel) -> None:
    if not (0 <= level.index < len(spec.levels)) or spec.levels[level.index] != level:
        raise UnknownLevelError(f"level {level} is not part of this processor spec")


def active_power(spec: ProcessorSpec, level: FrequencyLevel) -> float:
    """Active-mode draw in watts at a ladder level."""
    _require_level(spec, level)
    return spec.coeff_a * level.freq * level.vdd**2 + spec.coeff_b * level.vdd + spec.p_device


def idle_power(spec: ProcessorSpec) -> float:
    """Idle draw in watts; independent of the current frequency level."""
    return spec.p_idle


def task_energy(spec: ProcessorSpec, level: FrequencyLevel, t_active: float, t_idle: float) -> EnergyBreakdown:
    """Energy of one task window: active power over t_active plus idle power over t_idle."""
    if t_active < 0 or t_idle < 0:
        raise DomainError(f"times must be >= 0 (got t_active={t_active}, t_idle={t_idle})")
    return EnergyBreakdown(active_power(spec, level) * t_active, spec.p_idle * t_idle)


def energy_cost(average_power_mw: float, duration_h: float, rate_usd_per_mwh: float = DEFAULT_COST_RATE) -> float:
    """Operating cost in dollars for a sustained average draw.

    Power is in megawatts, duration in hours, rate in $/MWh.
    """
    if average_power_mw < 0 or duration_h < 0 or rate_usd_per_mwh < 0:
        raise DomainError("power, duration, and rate must all be >= 0")
    return average_power_mw * duration_h * rate_usd_per_mwh

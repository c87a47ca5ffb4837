"""Energy, temperature, and wear co-simulation for a DVFS processor.

Quantifies how direct vs. step-based frequency transitions trade energy
consumption against component lifetime under deadline-constrained workloads.
"""

from .engine import (
    ComparisonReport,
    PolicyOutcome,
    Scenario,
    SimReport,
    TaskOutcome,
    TracePoint,
    TransitionEvent,
    compare_policies,
    policy_label,
    simulate,
    validate_scenario,
)
from .config import load_scenario, parse_scenario
from .errors import (
    DomainError,
    InfeasibleError,
    PolicyRunError,
    ScenarioError,
    UnknownLevelError,
)
from .power import (
    EnergyBreakdown,
    FrequencyLevel,
    ProcessorSpec,
    ValidationResult,
    Violation,
    active_power,
    energy_cost,
    idle_power,
    task_energy,
    validate_spec,
)
from .reporting import (
    read_report,
    write_comparison,
    write_report,
    write_trace,
)
from .thermal import (
    ThermalParams,
    ThermalState,
    WearLedger,
    arrhenius_factor,
    integrate_thermal_wear,
    project_lifetime,
    steady_state_temp,
    thermal_step,
)
from .transitions import (
    Hop,
    TransitionPlan,
    TransitionPolicy,
    WearParams,
    full_span,
    plan_transition,
    plan_wear,
    shock_wear,
)
from .workload import (
    GovernorPolicy,
    Task,
    execution_time,
    lowest_feasible_level,
    min_energy_level,
    select_level,
)

__version__ = "0.1.0"

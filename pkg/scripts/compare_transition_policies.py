#!/usr/bin/env python3
"""Compare direct vs. step-based frequency transitions on one scenario.

Runs the workload under a direct policy and under stepped policies with a few
dwell times, then prints the side-by-side energy / deadline / wear / lifetime
table. Larger dwells save energy by doing work at lower frequencies on the way
up, but stretch execution and can start missing deadlines.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from dvfsim import TransitionPolicy, compare_policies, load_scenario
from dvfsim.reporting import format_comparison_table

DEFAULT_SCENARIO = Path(__file__).resolve().parent.parent / "scenarios" / "turion6.json"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scenario", default=str(DEFAULT_SCENARIO))
    parser.add_argument("--dwells", default="0,0.1,0.25,0.5", help="comma-separated dwell times in seconds")
    args = parser.parse_args()

    scenario = load_scenario(args.scenario)
    policies = [TransitionPolicy("direct")]
    policies += [TransitionPolicy("stepped", float(d)) for d in args.dwells.split(",")]

    comparison = compare_policies(scenario, policies)
    print(f"scenario: {args.scenario}")
    print(f"shock exponent alpha = {scenario.spec.wear.alpha:g}\n")
    print(format_comparison_table(comparison))

    base, best = comparison.runs[0], max(comparison.runs, key=lambda r: r.report.projected_lifetime)
    gain = best.report.projected_lifetime / base.report.projected_lifetime
    print(f"\nbest lifetime: {best.label} ({gain:.2f}x the direct-policy projection)")
    return 0


if __name__ == "__main__":
    sys.exit(main())

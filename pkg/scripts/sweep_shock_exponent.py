#!/usr/bin/env python3
"""Sweep the shock exponent and show where stepping starts to pay off.

At alpha = 1 the per-hop shocks sum to the same total as one direct jump, so
stepping buys nothing; the advantage grows with alpha. The sweep runs the same
workload under both policies for each exponent and prints the lifetime ratio.
"""

import argparse
import dataclasses
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from dvfsim import TransitionPolicy, WearParams, load_scenario, simulate

DEFAULT_SCENARIO = Path(__file__).resolve().parent.parent / "scenarios" / "turion6.json"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scenario", default=str(DEFAULT_SCENARIO))
    parser.add_argument("--alphas", default="1,1.5,2,3")
    args = parser.parse_args()

    base = load_scenario(args.scenario)
    print(f"{'alpha':>6}  {'direct_shock':>13}  {'stepped_shock':>13}  {'lifetime_ratio':>14}")
    for text in args.alphas.split(","):
        alpha = float(text)
        wear = WearParams(base.spec.wear.k_shock, alpha, base.spec.wear.f_span)
        spec = dataclasses.replace(base.spec, wear=wear)
        runs = {}
        for kind in ("direct", "stepped"):
            scenario = dataclasses.replace(base, spec=spec, policy=TransitionPolicy(kind))
            runs[kind], _ = simulate(scenario)
        ratio = runs["stepped"].projected_lifetime / runs["direct"].projected_lifetime
        print(
            f"{alpha:>6g}  {runs['direct'].ledger.shock_wear:>13.6g}"
            f"  {runs['stepped'].ledger.shock_wear:>13.6g}  {ratio:>14.4f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run the whole verification battery at desk scale and print the reports.

Covers the theorem identity and decomposition for n = 2..5 in all four
mode combinations, the commutative collapse, the refutation of the false
formula for n = 4 and 5, and a seeded numeric cross-validation round.
"""

import argparse
import sys

from njordan.concrete import cross_validate
from njordan.freealg import Mode
from njordan.jordan import (
    JordanConfig,
    refute_cheshmavar,
    render_subset,
    verify_collapse,
    verify_decomposition,
    verify_theorem,
)

MODES = [(a, b) for a in Mode for b in Mode]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    failures = 0
    for n in range(2, args.max_n + 1):
        for a_mode, b_mode in MODES:
            cfg = JordanConfig(n, a_mode, b_mode, cap=max(8, n))
            for report in (verify_theorem(cfg), verify_decomposition(cfg)):
                line = (f"{report.command:<10} n={n} A={a_mode.value:<6} "
                        f"B={b_mode.value:<6} {report.outcome.upper()} "
                        f"({report.elapsed_ms} ms)")
                print(line)
                failures += not report.passed
        collapse = verify_collapse(JordanConfig(n))
        print(f"{'collapse':<10} n={n} factor={collapse.payload['factor']} "
              f"{collapse.outcome.upper()}")
        failures += not collapse.passed

    for n in (4, 5):
        if n > args.max_n:
            continue
        result = refute_cheshmavar(JordanConfig(n))
        pair = frozenset({1, 2})
        lhs, rhs = result.multiplicities[pair]
        print(f"{'refute':<10} n={n} residual_terms={len(result.residual)} "
              f"pair {render_subset(pair)} counted lhs={lhs} rhs={rhs}")
        failures += not result.residual_nonzero()

    for a_mode in (Mode.COMMUTATIVE, Mode.NONCOMMUTATIVE):
        cfg = JordanConfig(3, a_mode, a_mode)
        report = cross_validate(cfg, args.trials, args.seed)
        print(f"{'crossval':<10} n=3 modes={a_mode.value} "
              f"algebra={report.payload['algebra_a']} "
              f"{report.payload['equal_trials']}/{report.payload['trials']} "
              f"{report.outcome.upper()}")
        failures += not report.passed

    print("ALL PASS" if failures == 0 else f"{failures} FAILURES")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Survey small combinatorial maps and print the parallel-edge and
arc-class verification reports.

Usage: python3 scripts/graph_survey.py [V_max] [E_budget] [chi_min]
"""

import sys

from knotforge import maps


def main() -> int:
    v_max = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    e_budget = int(sys.argv[2]) if len(sys.argv) > 2 else 12
    chi_min = int(sys.argv[3]) if len(sys.argv) > 3 else -2
    report = maps.verify_parallelP(v_max, e_budget, chi_min)
    sys.stdout.write(report.render())
    tri = maps.verify_parallel_class_bound()
    sys.stdout.write(tri.render())
    return 0 if not report.counterexamples and tri.ok else 1


if __name__ == "__main__":
    sys.exit(main())

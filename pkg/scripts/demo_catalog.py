#!/usr/bin/env python3
"""Build the desk-demo catalog: kappa = (2,1) twisted along the (1,1)
class, with bridge and hitting bounds at chi(Q) = -6, and print it as csv.

Usage: python3 scripts/demo_catalog.py [out.csv]
"""

import sys

from knotforge import catalog
from knotforge.torus import normalize


def main() -> int:
    cat = catalog.generate_family(
        g=2,
        family="H",
        kappa=normalize(2, 1),
        alpha=normalize(1, 1),
        n_range=[4752, 5000, 10000],
        i_range=[2592, 5184, 10368],
        chi_Q_bridge=-6,
        chi_Q_nu=-6,
        chi_Q_hit=-6,
    )
    text = catalog.render_csv(cat)
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 1 if cat.errored else 0


if __name__ == "__main__":
    sys.exit(main())

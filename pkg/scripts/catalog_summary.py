#!/usr/bin/env python3
"""Print a one-line structural summary of every catalog instance.

A quick way to eyeball the zoo: sizes, strong grading, graded field/domain
flags, and how many points each spectrum has.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from z2spec.catalog import CATALOG
from z2spec.grading import is_strongly_graded
from z2spec.maxfield import is_graded_domain, is_graded_field
from z2spec.rings import spec
from z2spec.spectrum import graded_spec


def main() -> int:
    header = (f"{'instance':<16} {'|R|':>4} {'|R0|':>4} {'|R1|':>4} "
              f"{'strong':>6} {'field':>5} {'domain':>6} {'gr.spec':>7} {'spec':>4}")
    print(header)
    print("-" * len(header))
    for entry in CATALOG:
        g = entry.build()
        points = len(graded_spec(g).graded_points)
        flat_points = len(spec(g.ring))
        print(f"{entry.instance_id:<16} {g.ring.size:>4} {len(g.r0):>4} "
              f"{len(g.r1):>4} {str(is_strongly_graded(g)):>6} "
              f"{str(is_graded_field(g)):>5} {str(is_graded_domain(g)):>6} "
              f"{points:>7} {flat_points:>4}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

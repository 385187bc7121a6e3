"""Print the colorability summary table, recomputing what is checkable.

For the six safely-colorable lattices, runs the constructive colorer over a
batch of random labelings and reports the worst observed range.  For the
non-colorable ones, re-verifies the gadget is UNSAT at a small palette.  For
the unbounded ones, measures minimum colors along the spiral family.

Run:  python3 scripts/summarize_lattices.py
"""

from __future__ import annotations

import random
import sys

sys.path.insert(0, "src")

from happy_edges.coloring import color_patch
from happy_edges.graph import FAR, NEAR, verify_coloring
from happy_edges.hardness import (
    GADGET_HOSTS,
    build_dual_spiral,
    build_gadget,
    build_square_spiral,
)
from happy_edges.lattices import LATTICE_INFO, LATTICE_NAMES, PatchParams, generate
from happy_edges.solver import SolveQuery, decide, min_colors

SPIRALS = {
    "4^4": lambda: [build_square_spiral(n) for n in (1, 3, 5)],
    "D(3.4.6.4)": lambda: [build_dual_spiral("d3464", s) for s in (1, 2)],
    "D(3.6.3.6)": lambda: [build_dual_spiral("d3636", s) for s in (1, 2)],
}

GADGET_BY_HOST = {
    host: name for name, hosts in GADGET_HOSTS.items() for host in hosts
}


def main():
    rng = random.Random(0)
    for name in LATTICE_NAMES:
        info = LATTICE_INFO[name]
        status = info["status"]
        line = f"{name:14s} {status:16s}"
        if status == "total-colorable":
            patch = generate(name, PatchParams(2, 2))
            worst = 0
            for _ in range(50):
                labels = [
                    FAR if rng.random() < 0.5 else NEAR
                    for _ in patch.graph.edges
                ]
                scheme = color_patch(patch, labels)
                report = verify_coloring(
                    patch.graph.with_labels(labels), scheme.coloring, scheme.t
                )
                assert report.valid
                worst = max(worst, report.range_used)
            line += f" t={scheme.t} palette<={scheme.r} (worst observed {worst})"
        elif status == "non-colorable":
            gadget = build_gadget(GADGET_BY_HOST[name])
            unsat = all(
                decide(SolveQuery(gadget, r=r)).status == "UNSAT"
                for r in range(1, 6)
            )
            line += f" gadget {GADGET_BY_HOST[name]} UNSAT(r<=5)={unsat}"
        elif status == "unbounded":
            values = [
                min_colors(g, t=1, r_max=8)[0] for g in SPIRALS[name]()
            ]
            line += f" min colors along spiral: {values}"
        else:
            line += " (open)"
        print(line)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Print exact-vs-bound gap tables for the named graph corpus.

Usage:
    python scripts/tightness_table.py [--theorems LIST]

For every named graph this solves each alliance number exactly, evaluates
every applicable theorem, and prints one row per (theorem, target) with the
gap. Tight rows (gap 0) are marked with '*'.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from alliances import generators
from alliances.alliance_solver import domination_number, min_alliance_number, spec_from_name
from alliances.bounds import evaluate_all
from alliances.graph_core import girth
from alliances.spectral import spectral_summary

NAMED = {
    "petersen": generators.petersen(),
    "icosahedron": generators.icosahedron(),
    "3-cube": generators.hypercube(3),
    "K6-matching": generators.complete_minus_matching(6),
    "grid 2x3": generators.grid(2, 3),
    "bowtie": generators.bowtie(),
    "K_{3,3}": generators.complete_bipartite(3, 3),
    "K_{3,6}": generators.complete_bipartite(3, 6),
    "K_6": generators.complete(6),
    "C_6": generators.cycle(6),
}

TARGETS = (
    "defensive",
    "strong_defensive",
    "global_defensive",
    "global_strong_defensive",
    "global_offensive",
    "global_strong_offensive",
    "global_dual",
    "global_strong_dual",
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--theorems", help="comma list of theorem ids to include")
    args = parser.parse_args()
    theorems = tuple(t.strip() for t in args.theorems.split(",")) if args.theorems else None

    print(f"{'graph':<14} {'theorem':<22} {'target':<24} {'bound':>5} {'exact':>5} {'gap':>4}")
    print("-" * 80)
    tight = 0
    total = 0
    for name, g in NAMED.items():
        exact = {t: min_alliance_number(g, spec_from_name(t)).value for t in TARGETS}
        exact["domination"] = domination_number(g).value
        g_girth = girth(g)
        if not math.isinf(g_girth):
            exact["girth"] = int(g_girth)
        for row in evaluate_all(g, spectral_summary(g), theorems):
            if not row.applicable or row.target not in exact:
                continue
            gap = exact[row.target] - row.value
            total += 1
            tight += gap == 0
            marker = " *" if gap == 0 else ""
            print(
                f"{name:<14} {row.theorem:<22} {row.target:<24} "
                f"{row.value:>5} {exact[row.target]:>5} {gap:>4}{marker}"
            )
    print("-" * 80)
    print(f"{tight}/{total} bound evaluations are tight")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Census of covering-radius-1 completely regular codes in small Hamming spaces.

Enumerates every code exhaustively, tallies codes per (gamma, beta, index),
and checks the realized normalized parameters against the feasibility
classification for three-position spaces.

Usage:
    python3 scripts/census.py                  # default space list
    python3 scripts/census.py --spaces 3,3 --workers 4
"""

import argparse
import sys
import time

from crcforge.parameters import feasible_h3q
from crcforge.search import SearchConstraints, enumerate_crcs

DEFAULT_SPACES = [(2, 2), (3, 2), (2, 3), (2, 4), (3, 3)]


def predicted_normalized(q: int) -> set:
    """Normalized (gamma, index) pairs the classification declares feasible in H(3,q)."""
    out = set()
    for index in (1, 2, 3):
        for gamma in range(1, q * index // 2 + 1):
            if feasible_h3q(q, gamma, index).feasible:
                out.add((gamma, index))
    return out


def census(n: int, q: int, workers) -> None:
    t0 = time.time()
    summary = enumerate_crcs(SearchConstraints(n, q), workers=workers)
    elapsed = time.time() - t0
    print(f"H({n},{q}): {summary.codes_found} codes, {summary.nodes} nodes, "
          f"{elapsed:.2f}s")
    for g, b, i in sorted(summary.parameter_sets):
        print(f"    gamma={g} beta={b} index={i}")
    if n == 3:
        realized = {(min(g, b), i) for g, b, i in summary.parameter_sets}
        predicted = predicted_normalized(q)
        status = "MATCH" if realized == predicted else "MISMATCH"
        print(f"    classification check: {status} "
              f"(realized {sorted(realized)}, predicted {sorted(predicted)})")
        if realized != predicted:
            sys.exit(1)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--spaces", type=str, default=None,
                    help="comma pair n,q (repeatable via semicolons), e.g. '3,2;3,3'")
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()

    if args.spaces:
        spaces = []
        for part in args.spaces.split(";"):
            n, q = (int(x) for x in part.split(","))
            spaces.append((n, q))
    else:
        spaces = DEFAULT_SPACES

    for n, q in spaces:
        census(n, q, args.workers)


if __name__ == "__main__":
    main()

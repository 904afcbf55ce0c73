#!/usr/bin/env python3
"""Render a three-dimensional code as ASCII hyperface layers.

Reads a code file (as produced by ``crcforge construct``) or builds one on
the fly, then prints, for each symbol of the chosen direction, the q x q
slice of the indicator with '*' for codewords.

Usage:
    crcforge construct c --q 6 --t 5 -o /tmp/c65.json
    python3 scripts/render_layers.py /tmp/c65.json --direction 3
"""

import argparse
import sys

import numpy as np

from crcforge.codefile import read_code
from crcforge.verifier import CrcCertificate, check_crc


def render_slice(plane: np.ndarray) -> str:
    return "\n".join("".join("*" if c else "." for c in row) for row in plane)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("file", help="code file to render")
    ap.add_argument("--direction", type=int, default=1,
                    help="position whose symbols index the layers (1-based)")
    args = ap.parse_args()

    code, _meta = read_code(args.file)
    sp = code.space
    if sp.n != 3:
        print(f"layer rendering needs n=3, file has n={sp.n}", file=sys.stderr)
        sys.exit(2)
    if not 1 <= args.direction <= 3:
        print(f"--direction must be 1..3, got {args.direction}", file=sys.stderr)
        sys.exit(2)

    cert = check_crc(code)
    head = f"H(3,{sp.q}), {code.size} codewords"
    if isinstance(cert, CrcCertificate) and cert.rho == 1:
        head += f", gamma={cert.gamma} beta={cert.beta}"
    print(head)

    g = np.moveaxis(code.grid, args.direction - 1, 0)
    others = [j for j in (1, 2, 3) if j != args.direction]
    for s in range(sp.q):
        print(f"\nposition {args.direction} = {s}   "
              f"(rows: position {others[0]}, cols: position {others[1]})")
        print(render_slice(g[s]))


if __name__ == "__main__":
    main()

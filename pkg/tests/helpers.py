"""Brute-force oracles shared by the test modules.

Everything here recomputes properties straight from definitions (explicit
loops over vertices and neighbor enumeration), independently of the
vectorized library code it is used to check.
"""

from __future__ import annotations

import itertools

from crcforge.hamming import Code, Space, hamming_distance, neighbors


def brute_distances(sp: Space, codewords) -> dict:
    """Vertex -> min Hamming distance to the codeword set, by definition."""
    cs = [tuple(c) for c in codewords]
    return {v: min(hamming_distance(v, c) for c in cs) for v in sp.vertices()}


def brute_layer_sizes(sp: Space, codewords) -> list[int]:
    dist = brute_distances(sp, codewords)
    rho = max(dist.values())
    return [sum(1 for d in dist.values() if d == i) for i in range(rho + 1)]


def brute_count_in(sp: Space, members: set, v) -> int:
    """Neighbors of v inside the given vertex set, by neighbor enumeration."""
    return sum(1 for u in neighbors(sp, v) if u in members)


def brute_crc1_params(sp: Space, codewords):
    """(gamma, beta) if the set is completely regular with covering radius 1,
    else None.  Straight from the definition."""
    members = set(tuple(c) for c in codewords)
    if not members or len(members) == sp.size:
        return None
    gammas = set()
    betas = set()
    for v in sp.vertices():
        cnt = brute_count_in(sp, members, v)
        if v in members:
            betas.add(sp.valency - cnt)
        else:
            if cnt == 0:
                return None  # covering radius exceeds 1
            gammas.add(cnt)
    if len(gammas) == 1 and len(betas) == 1:
        return (gammas.pop(), betas.pop())
    return None


def normalized_params(triples) -> set:
    """{(gamma, beta, index)} -> {(min(gamma,beta), index)}."""
    return {(min(g, b), i) for (g, b, i) in triples}


def code_of(sp: Space, codewords) -> Code:
    return Code.from_vertices(sp, codewords)


def all_vertex_subsets(sp: Space):
    """Every proper nonempty subset of a (tiny) space, as vertex tuples."""
    verts = list(sp.vertices())
    for bits in range(1, 2 ** sp.size - 1):
        yield [verts[i] for i in range(sp.size) if bits >> i & 1]

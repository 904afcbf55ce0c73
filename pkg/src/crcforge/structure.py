"""Structure analysis of three-dimensional codes.

Two views of a code C in H(3,q):

- Derivative functions: fixing position i to symbol u or v and subtracting the
  two restrictions gives a {-1,0,+1} function on the remaining q x q square.
  For well-behaved codes each derivative is zero, a "string" (depends on one
  coordinate, +1 on X, -1 on Y with |X| = |Y|), or a "cross" (+1 on
  X x (A-Y), -1 on (A-X) x Y).
- Clique decompositions: when C is a disjoint union of maximal cliques, the
  partition is recovered, and if cliques of all three codirections occur the
  three bundles are projected to stochastic grid blocks whose sizes and
  degrees form a three-block system witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from . import stochastic
from .hamming import Clique, Code
from .parameters import ConditionOneWitness, check_condition1


@dataclass(frozen=True)
class DerivativeFunction:
    """A {-1,0,+1}-valued function on the q x q square left after dropping
    position i; entry [y1, y2] is C(..u..) - C(..v..) at the point whose
    remaining coordinates are (y1, y2) in position order."""

    q: int
    values: np.ndarray  # (q, q) int8

    def __post_init__(self):
        if self.values.shape != (self.q, self.q):
            raise ValueError(f"derivative table shape {self.values.shape} != ({self.q},{self.q})")


def derivative(code: Code, i: int, u: int, v: int) -> DerivativeFunction:
    if code.space.n != 3:
        raise ValueError(f"derivatives are defined for n=3, got n={code.space.n}")
    q = code.space.q
    if not 1 <= i <= 3:
        raise ValueError(f"position {i} out of 1..3")
    if not (0 <= u < q and 0 <= v < q):
        raise ValueError(f"symbols u={u}, v={v} out of 0..{q - 1}")
    g = code.grid
    vals = np.take(g, u, axis=i - 1).astype(np.int8) - np.take(g, v, axis=i - 1).astype(np.int8)
    vals.setflags(write=False)
    return DerivativeFunction(q, vals)


@dataclass(frozen=True)
class DerivativeClass:
    """kind is 'zero', 'string', 'cross', or 'unclassified'.  Strings carry
    the axis (1 or 2) they depend on plus the +1 set x and -1 set y; crosses
    carry the +1 row set x and -1 column set y."""

    kind: str
    axis: Union[int, None] = None
    x: Union[frozenset, None] = None
    y: Union[frozenset, None] = None


def classify(f: DerivativeFunction) -> DerivativeClass:
    """Try zero, then strings along each axis, then cross, else unclassified."""
    vals = f.values
    q = f.q
    if not vals.any():
        return DerivativeClass("zero")

    for axis in (1, 2):
        # axis 1: value depends only on the first remaining coordinate (rows
        # constant); axis 2: only on the second (columns constant)
        constant = (vals == vals[:, :1]).all() if axis == 1 else (vals == vals[:1, :]).all()
        if constant:
            line = vals[:, 0] if axis == 1 else vals[0, :]
            x = frozenset(np.flatnonzero(line == 1).tolist())
            y = frozenset(np.flatnonzero(line == -1).tolist())
            if x and y and len(x) == len(y):
                return DerivativeClass("string", axis=axis, x=x, y=y)

    x = frozenset(np.flatnonzero((vals == 1).any(axis=1)).tolist())
    y = frozenset(np.flatnonzero((vals == -1).any(axis=0)).tolist())
    if x and y and len(x) < q and len(y) < q and len(x) == len(y):
        expected = np.zeros((q, q), dtype=np.int8)
        xi = np.fromiter(sorted(x), dtype=int)
        yi = np.fromiter(sorted(y), dtype=int)
        not_y = np.setdiff1d(np.arange(q), yi)
        not_x = np.setdiff1d(np.arange(q), xi)
        expected[np.ix_(xi, not_y)] = 1
        expected[np.ix_(not_x, yi)] = -1
        if np.array_equal(vals, expected):
            return DerivativeClass("cross", x=x, y=y)
    return DerivativeClass("unclassified")


def classify_all(code: Code) -> dict[tuple[int, int, int], DerivativeClass]:
    """Classification of every derivative (i, u, v) with u != v."""
    out = {}
    q = code.space.q
    for i in (1, 2, 3):
        for u in range(q):
            for v in range(q):
                if u != v:
                    out[(i, u, v)] = classify(derivative(code, i, u, v))
    return out


def full_cliques(code: Code) -> list[Clique]:
    """Maximal cliques lying entirely inside the code, codirection-major then
    fixed-lex."""
    g = code.grid
    out = []
    for j in range(code.space.n):
        arr = g.all(axis=j)
        for idx in np.argwhere(arr):
            out.append(Clique(j + 1, tuple(int(c) for c in idx)))
    return out


@dataclass(frozen=True)
class CliqueDecomposition:
    """A partition of a code into maximal cliques.

    ``strong`` means all three codirections occur; then the three bundles
    project to grid blocks d1 (rows = x2-set S, cols = x3-set T of the
    codirection-1 cliques), d2 (rows = x1-set R, cols = complement of T), d3
    (rows/cols = complements of R and S), each doubly stochastic, and
    ``witness`` collects (|R|, |S|, |T|, a, b, c)."""

    cliques: tuple[Clique, ...]
    strong: bool
    r_set: Union[frozenset, None] = None
    s_set: Union[frozenset, None] = None
    t_set: Union[frozenset, None] = None
    d1: Union[stochastic.GridSet, None] = None
    d2: Union[stochastic.GridSet, None] = None
    d3: Union[stochastic.GridSet, None] = None
    witness: Union[ConditionOneWitness, None] = None

    def by_codirection(self, j: int) -> tuple[Clique, ...]:
        return tuple(c for c in self.cliques if c.codirection == j)


@dataclass(frozen=True)
class CliqueCoverFailure:
    """Why no clique partition (or no lawful block structure) exists.

    kind 'not-clique-partition': ``witness_vertex`` is the first codeword in
    exactly ``cover_count`` (0 or >= 2) full cliques obstructing a partition.
    kind 'lemma-violated': a partition exists but its bundles break the
    complement/stochasticity laws; ``detail`` says which."""

    kind: str
    witness_vertex: Union[tuple, None] = None
    cover_count: Union[int, None] = None
    detail: str = ""


CoverResult = Union[CliqueDecomposition, CliqueCoverFailure]


def _grid_block(cells: set[tuple[int, int]], rows: list[int], cols: list[int]) -> stochastic.GridSet:
    rpos = {r: i for i, r in enumerate(rows)}
    cpos = {c: i for i, c in enumerate(cols)}
    m = np.zeros((len(rows), len(cols)), dtype=bool)
    for r, c in cells:
        m[rpos[r], cpos[c]] = True
    return stochastic.GridSet(len(rows), len(cols), m)


def clique_cover(code: Code) -> CoverResult:
    """Partition a code in H(3,q) into maximal cliques if possible.

    Codewords covered by no full clique refute immediately.  If every
    codeword lies in exactly one full clique the partition is forced;
    otherwise an exact-cover backtracking over the full cliques decides.
    """
    sp = code.space
    if sp.n != 3:
        raise ValueError(f"clique decomposition is implemented for n=3, got n={sp.n}")
    if code.size == 0:
        raise ValueError("empty code has no clique decomposition")
    q = sp.q
    g = code.grid
    fc = [g.all(axis=j) for j in range(3)]
    cnt = (fc[0][None, :, :].astype(np.int16)
           + fc[1][:, None, :]
           + fc[2][:, :, None])

    uncoverable = g & (cnt == 0)
    if uncoverable.any():
        v = tuple(int(c) for c in np.argwhere(uncoverable)[0])
        return CliqueCoverFailure("not-clique-partition", v, 0,
                                  "codeword lies in no full clique")

    if (cnt[g] == 1).all():
        chosen = full_cliques(code)
    else:
        chosen = _exact_cover(code, fc)
        if chosen is None:
            over = g & (cnt >= 2)
            v = tuple(int(c) for c in np.argwhere(over)[0])
            return CliqueCoverFailure("not-clique-partition", v, int(cnt[v]),
                                      "full cliques overlap and admit no exact cover")

    return _decompose(code, chosen)


def _exact_cover(code: Code, fc: list[np.ndarray]) -> Union[list[Clique], None]:
    """Deterministic backtracking: cover the first uncovered codeword by the
    least clique (codirection order) disjoint from the cover so far."""
    sp = code.space
    q = sp.q
    cliques: list[tuple[Clique, np.ndarray]] = []
    for j in range(3):
        stride = q ** (sp.n - 1 - j)
        for idx in np.argwhere(fc[j]):
            cl = Clique(j + 1, tuple(int(c) for c in idx))
            base = sp.index(cl.fixed[:j] + (0,) + cl.fixed[j:])
            cliques.append((cl, base + stride * np.arange(q)))
    at: dict[int, list[int]] = {}
    for cid, (_, flat) in enumerate(cliques):
        for v in flat:
            at.setdefault(int(v), []).append(cid)
    member_idx = [int(i) for i in code.indices()]
    covered = np.zeros(sp.size, dtype=bool)
    chosen: list[int] = []

    def first_uncovered() -> Union[int, None]:
        for v in member_idx:
            if not covered[v]:
                return v
        return None

    def dfs() -> bool:
        v = first_uncovered()
        if v is None:
            return True
        for cid in at.get(v, ()):
            flat = cliques[cid][1]
            if not covered[flat].any():
                covered[flat] = True
                chosen.append(cid)
                if dfs():
                    return True
                chosen.pop()
                covered[flat] = False
        return False

    if not dfs():
        return None
    return [cliques[cid][0] for cid in sorted(chosen)]


def _decompose(code: Code, chosen: list[Clique]) -> CoverResult:
    q = code.space.q
    syms = set(range(q))
    cells = {1: set(), 2: set(), 3: set()}
    for cl in chosen:
        cells[cl.codirection].add(cl.fixed)
    strong = all(cells[j] for j in (1, 2, 3))
    decomposition = CliqueDecomposition(tuple(sorted(
        chosen, key=lambda c: (c.codirection, c.fixed))), strong)
    if not strong:
        return decomposition

    s_set = {x2 for x2, _ in cells[1]}
    t_set = {x3 for _, x3 in cells[1]}
    r_set = {x1 for x1, _ in cells[2]}
    t2_set = {x3 for _, x3 in cells[2]}
    r3_set = {x1 for x1, _ in cells[3]}
    s3_set = {x2 for _, x2 in cells[3]}

    if t2_set != syms - t_set:
        return CliqueCoverFailure(
            "lemma-violated",
            detail="x3-symbols of codirection-2 cliques are not the complement "
                   "of the codirection-1 x3-symbols")
    if r3_set != syms - r_set or s3_set != syms - s_set:
        return CliqueCoverFailure(
            "lemma-violated",
            detail="codirection-3 symbol sets are not the complements of the "
                   "codirection-2 x1-set and codirection-1 x2-set")

    d1 = _grid_block(cells[1], sorted(s_set), sorted(t_set))
    d2 = _grid_block(cells[2], sorted(r_set), sorted(syms - t_set))
    d3 = _grid_block(cells[3], sorted(syms - r_set), sorted(syms - s_set))
    p1 = stochastic.profile(d1)
    p2 = stochastic.profile(d2)
    p3 = stochastic.profile(d3)
    if p1 is None or p2 is None or p3 is None:
        which = [n for n, p in zip(("d1", "d2", "d3"), (p1, p2, p3)) if p is None]
        return CliqueCoverFailure(
            "lemma-violated", detail=f"block(s) {', '.join(which)} not doubly stochastic")
    if p2.a != p1.a or p3.a != p1.b or p3.b != p2.b:
        return CliqueCoverFailure(
            "lemma-violated",
            detail=f"block degrees disagree: d1={p1}, d2={p2}, d3={p3}")

    w = ConditionOneWitness(len(r_set), len(s_set), len(t_set), p1.a, p1.b, p2.b)
    if not check_condition1(code.space.q, w):
        return CliqueCoverFailure(
            "lemma-violated", detail=f"projected witness {w.as_tuple()} fails the block system")
    return CliqueDecomposition(decomposition.cliques, True,
                               frozenset(r_set), frozenset(s_set), frozenset(t_set),
                               d1, d2, d3, w)


def extract_construction_d(code: Code) -> tuple[int, ConditionOneWitness,
                                                tuple[stochastic.GridSet, stochastic.GridSet,
                                                      stochastic.GridSet]]:
    """Recover (q, witness, blocks) from a code that is a disjoint union of
    cliques of all three codirections."""
    res = clique_cover(code)
    if isinstance(res, CliqueCoverFailure):
        raise ValueError(f"no clique partition: {res.kind} ({res.detail or res.witness_vertex})")
    if not res.strong:
        raise ValueError("clique partition lacks one of the three codirections")
    return code.space.q, res.witness, (res.d1, res.d2, res.d3)

"""Distance partitions, complete-regularity certificates, and code profiles.

A code C is completely regular when every vertex at distance i from C has
constant numbers of neighbors at distances i-1 and i+1, depending only on i.
For covering radius rho = 1 the certificate carries the pair (gamma, beta):
every non-codeword has gamma neighbors in C, every codeword has beta
neighbors outside.  Counting is vectorized: the number of set members
adjacent to each vertex equals the sum of line sums through it minus n
times its own membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .hamming import Clique, Code, Space


def neighbor_counts(space: Space, indicator: np.ndarray) -> np.ndarray:
    """For every vertex, the number of its neighbors inside the indicated set."""
    g = np.asarray(indicator, dtype=np.int32).reshape(space.shape)
    tot = np.zeros(space.shape, dtype=np.int32)
    for ax in range(space.n):
        tot = tot + g.sum(axis=ax, keepdims=True)
    tot -= space.n * g
    return tot.reshape(space.size)


@dataclass(frozen=True)
class DistancePartition:
    """Layers C_0..C_rho of vertices by distance to a code (boolean indicators)."""

    space: Space
    classes: tuple[np.ndarray, ...]

    @property
    def rho(self) -> int:
        return len(self.classes) - 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(int(c.sum()) for c in self.classes)


def distance_partition(code: Code) -> DistancePartition:
    if code.size == 0:
        raise ValueError("empty code has no distance partition")
    sp = code.space
    layers = [code.mask.copy()]
    seen = code.mask.copy()
    while not seen.all():
        frontier = (neighbor_counts(sp, layers[-1]) > 0) & ~seen
        layers.append(frontier)
        seen |= frontier
    for layer in layers:
        layer.setflags(write=False)
    return DistancePartition(sp, tuple(layers))


@dataclass(frozen=True)
class CrcCertificate:
    """Witness that a code is completely regular.

    ``betas[i]`` counts neighbors one layer further out for a vertex in layer i
    (i = 0..rho-1); ``gammas[i-1]`` counts neighbors one layer closer for a
    vertex in layer i (i = 1..rho).  ``eigenvalue_index`` is the integer i
    solving n(q-1) - q*i = k - (gamma+beta) when rho = 1 and such an integer
    exists in 1..n, else None.
    """

    n: int
    q: int
    rho: int
    size: int
    betas: tuple[int, ...]
    gammas: tuple[int, ...]

    @property
    def valency(self) -> int:
        return self.n * (self.q - 1)

    @property
    def alphas(self) -> tuple[int, ...]:
        k = self.valency
        gam = (0,) + self.gammas
        bet = self.betas + (0,)
        return tuple(k - g - b for g, b in zip(gam, bet))

    # Covering-radius-1 accessors.

    def _require_rho1(self) -> None:
        if self.rho != 1:
            raise ValueError(f"accessor requires rho=1, certificate has rho={self.rho}")

    @property
    def gamma(self) -> int:
        self._require_rho1()
        return self.gammas[0]

    @property
    def beta(self) -> int:
        self._require_rho1()
        return self.betas[0]

    @property
    def alpha0(self) -> int:
        self._require_rho1()
        return self.valency - self.beta

    @property
    def alpha1(self) -> int:
        self._require_rho1()
        return self.valency - self.gamma

    @property
    def code_eigenvalues(self) -> tuple[int, int]:
        self._require_rho1()
        return (self.valency, self.valency - (self.gamma + self.beta))

    @property
    def eigenvalue_index(self) -> Union[int, None]:
        self._require_rho1()
        s = self.gamma + self.beta
        if s % self.q == 0 and 1 <= s // self.q <= self.n:
            return s // self.q
        return None


@dataclass(frozen=True)
class CrcFailure:
    """First deviation from complete regularity, in vertex order.

    The vertex sits in layer ``class_index`` and has ``observed_count``
    neighbors in layer ``target_class``; the layer's first vertex has
    ``expected_count``.
    """

    witness_vertex: tuple[int, ...]
    class_index: int
    target_class: int
    observed_count: int
    expected_count: int


CheckResult = Union[CrcCertificate, CrcFailure]


def check_crc(code: Code) -> CheckResult:
    """Decide complete regularity; return a certificate or the first failure."""
    sp = code.space
    if code.size == 0 or code.size == sp.size:
        raise ValueError("code must be a proper nonempty vertex subset")
    dp = distance_partition(code)
    counts = [neighbor_counts(sp, layer) for layer in dp.classes]

    best = None  # (vertex index, direction priority, failure record)
    gammas: list[int] = []
    betas: list[int] = []
    for i, layer in enumerate(dp.classes):
        members = np.flatnonzero(layer)
        # direction 0 = toward the code, direction 1 = away from it
        for direction, target in ((0, i - 1), (1, i + 1)):
            if not 0 <= target <= dp.rho:
                continue
            vals = counts[target][members]
            expected = int(vals[0])
            if direction == 0:
                gammas.append(expected)
            else:
                betas.append(expected)
            bad = np.flatnonzero(vals != expected)
            if bad.size:
                v = int(members[bad[0]])
                key = (v, direction)
                if best is None or key < best[0]:
                    best = (key, CrcFailure(sp.vertex(v), i, target,
                                            int(vals[bad[0]]), expected))
    if best is not None:
        return best[1]
    return CrcCertificate(sp.n, sp.q, dp.rho, code.size, tuple(betas), tuple(gammas))


@dataclass(frozen=True)
class HyperfaceProfile:
    """Counts |{x in C : x_j = a}| indexed by (position j, symbol a)."""

    counts: np.ndarray  # shape (n, q)

    @property
    def is_balanced(self) -> bool:
        return bool((self.counts == self.counts.flat[0]).all())

    @property
    def common(self) -> Union[int, None]:
        return int(self.counts.flat[0]) if self.is_balanced else None

    def count(self, direction: int, symbol: int) -> int:
        return int(self.counts[direction - 1, symbol])


def hyperface_profile(code: Code) -> HyperfaceProfile:
    g = code.grid
    n = code.space.n
    rows = []
    for j in range(n):
        other = tuple(ax for ax in range(n) if ax != j)
        rows.append(g.sum(axis=other) if other else g.astype(np.int64))
    counts = np.stack(rows).astype(np.int64)
    counts.setflags(write=False)
    return HyperfaceProfile(counts)


@dataclass(frozen=True)
class CliqueProfile:
    """Codeword counts for every maximal clique, grouped by codirection."""

    per_codirection: tuple[np.ndarray, ...]  # entry j-1 has shape (q,)*(n-1)

    @property
    def is_constant(self) -> bool:
        first = int(self.per_codirection[0].flat[0])
        return all((arr == first).all() for arr in self.per_codirection)

    @property
    def common(self) -> Union[int, None]:
        if not self.is_constant:
            return None
        return int(self.per_codirection[0].flat[0])

    def count(self, clique: Clique) -> int:
        return int(self.per_codirection[clique.codirection - 1][clique.fixed])


def clique_profile(code: Code) -> CliqueProfile:
    g = code.grid
    arrs = []
    for j in range(code.space.n):
        arr = g.sum(axis=j).astype(np.int64)
        arr.setflags(write=False)
        arrs.append(arr)
    return CliqueProfile(tuple(arrs))


def essential_positions(code: Code) -> tuple[int, ...]:
    """Positions (1-based) on which membership actually depends.

    Position j is essential iff some line in direction j is neither fully
    inside nor fully outside the code.
    """
    g = code.grid
    q = code.space.q
    out = []
    for j in range(code.space.n):
        sums = g.sum(axis=j)
        if ((sums != 0) & (sums != q)).any():
            out.append(j + 1)
    return tuple(out)


def reduce_code(code: Code) -> Code:
    """Delete every non-essential position; the result lives in H(n',q)."""
    ess = essential_positions(code)
    if not ess:
        raise ValueError("code has no essential positions; nothing to reduce to")
    keep = set(j - 1 for j in ess)
    slicer = tuple(slice(None) if ax in keep else 0 for ax in range(code.space.n))
    return Code(Space(len(ess), code.space.q), code.grid[slicer])


def extend_code(code: Code, at_position: int) -> Code:
    """Insert a fresh non-essential position, giving a code in H(n+1,q)."""
    n = code.space.n
    if not 1 <= at_position <= n + 1:
        raise ValueError(f"insertion position {at_position} out of 1..{n + 1}")
    g = np.expand_dims(code.grid, axis=at_position - 1)
    g = np.broadcast_to(g, (code.space.q,) * (n + 1))
    return Code(Space(n + 1, code.space.q), g.copy())

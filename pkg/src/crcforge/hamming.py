"""Hamming graphs H(n,q) and vertex subsets (codes) stored as dense indicators.

Vertices are q-ary n-tuples; two vertices are adjacent iff they differ in
exactly one position.  Positions are 1-based in every public interface.
Vertex indices are lexicographic with position 1 most significant, so the
indicator array of a code reshapes to shape (q,)*n with axis j-1 = position j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

# Largest vertex count a Space may have.  Dense per-code indicators make
# anything near this cap impractical anyway, but construction must not
# silently overflow below it.
SPACE_CAP = 2**32

Vertex = tuple[int, ...]


@dataclass(frozen=True)
class Space:
    """The Hamming graph H(n,q)."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.q < 2:
            raise ValueError(f"invalid dimensions: need n >= 1 and q >= 2, got n={self.n} q={self.q}")
        if self.q ** self.n > SPACE_CAP:
            raise ValueError(f"space too large: q^n = {self.q}^{self.n} exceeds cap {SPACE_CAP}")

    @property
    def size(self) -> int:
        return self.q ** self.n

    @property
    def valency(self) -> int:
        return self.n * (self.q - 1)

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.q,) * self.n

    def contains(self, v: Sequence[int]) -> bool:
        return len(v) == self.n and all(0 <= c < self.q for c in v)

    def check_vertex(self, v: Sequence[int]) -> Vertex:
        if not self.contains(v):
            raise ValueError(f"vertex {tuple(v)} not in H({self.n},{self.q})")
        return tuple(v)

    def index(self, v: Sequence[int]) -> int:
        """Lexicographic rank of a vertex, position 1 most significant."""
        self.check_vertex(v)
        i = 0
        for c in v:
            i = i * self.q + c
        return i

    def vertex(self, i: int) -> Vertex:
        if not 0 <= i < self.size:
            raise ValueError(f"vertex index {i} out of range for H({self.n},{self.q})")
        coords = []
        for _ in range(self.n):
            coords.append(i % self.q)
            i //= self.q
        return tuple(reversed(coords))

    def vertices(self) -> Iterator[Vertex]:
        return itertools.product(range(self.q), repeat=self.n)


def make_space(n: int, q: int) -> Space:
    return Space(n, q)


def neighbors(space: Space, v: Sequence[int]) -> list[Vertex]:
    """All n(q-1) neighbors, position-major then symbol-ascending."""
    v = space.check_vertex(v)
    out = []
    for j in range(space.n):
        for s in range(space.q):
            if s != v[j]:
                out.append(v[:j] + (s,) + v[j + 1:])
    return out


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return sum(a != b for a, b in zip(u, v))


@dataclass(frozen=True)
class Clique:
    """A maximal clique of H(n,q): all vertices agreeing outside one position.

    ``codirection`` is the free position (1-based); ``fixed`` gives the n-1
    frozen symbols in position order.
    """

    codirection: int
    fixed: tuple[int, ...]


@dataclass(frozen=True)
class Hyperface:
    """All q^(n-1) vertices with a given symbol in a given position."""

    direction: int
    symbol: int


def check_clique(space: Space, c: Clique) -> None:
    if not 1 <= c.codirection <= space.n:
        raise ValueError(f"clique codirection {c.codirection} out of 1..{space.n}")
    if len(c.fixed) != space.n - 1 or not all(0 <= s < space.q for s in c.fixed):
        raise ValueError(f"clique fixed symbols {c.fixed} invalid for H({space.n},{space.q})")


def check_hyperface(space: Space, h: Hyperface) -> None:
    if not 1 <= h.direction <= space.n:
        raise ValueError(f"hyperface direction {h.direction} out of 1..{space.n}")
    if not 0 <= h.symbol < space.q:
        raise ValueError(f"hyperface symbol {h.symbol} out of 0..{space.q - 1}")


def clique_vertices(space: Space, c: Clique) -> list[Vertex]:
    """The q vertices of a maximal clique, symbol-ascending in the free position."""
    check_clique(space, c)
    j = c.codirection - 1
    return [c.fixed[:j] + (s,) + c.fixed[j:] for s in range(space.q)]


def hyperface_vertices(space: Space, h: Hyperface) -> list[Vertex]:
    """The q^(n-1) vertices of a hyperface, in lexicographic order."""
    check_hyperface(space, h)
    j = h.direction - 1
    out = []
    for rest in itertools.product(range(space.q), repeat=space.n - 1):
        out.append(rest[:j] + (h.symbol,) + rest[j:])
    return out


def all_cliques(space: Space) -> Iterator[Clique]:
    """All n * q^(n-1) maximal cliques, codirection-major then fixed-lex."""
    for j in range(1, space.n + 1):
        for fixed in itertools.product(range(space.q), repeat=space.n - 1):
            yield Clique(j, fixed)


def all_hyperfaces(space: Space) -> Iterator[Hyperface]:
    for j in range(1, space.n + 1):
        for s in range(space.q):
            yield Hyperface(j, s)


class Code:
    """A subset of the vertices of a Hamming space.

    Stored as a flat immutable boolean indicator over vertex indices.
    """

    __slots__ = ("space", "_mask")

    def __init__(self, space: Space, mask: np.ndarray):
        mask = np.ascontiguousarray(mask, dtype=bool)
        if mask.shape == space.shape:
            mask = mask.reshape(space.size)
        if mask.shape != (space.size,):
            raise ValueError(f"indicator shape {mask.shape} does not match H({space.n},{space.q})")
        mask = mask.copy()
        mask.setflags(write=False)
        self.space = space
        self._mask = mask

    @classmethod
    def from_vertices(cls, space: Space, vs: Iterable[Sequence[int]]) -> "Code":
        mask = np.zeros(space.size, dtype=bool)
        for v in vs:
            mask[space.index(v)] = True
        return cls(space, mask)

    @classmethod
    def from_indices(cls, space: Space, idx: Iterable[int]) -> "Code":
        mask = np.zeros(space.size, dtype=bool)
        for i in idx:
            if not 0 <= i < space.size:
                raise ValueError(f"vertex index {i} out of range")
            mask[i] = True
        return cls(space, mask)

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    @property
    def grid(self) -> np.ndarray:
        """Indicator reshaped to (q,)*n; axis j-1 is position j."""
        return self._mask.reshape(self.space.shape)

    @property
    def size(self) -> int:
        return int(self._mask.sum())

    def __len__(self) -> int:
        return self.size

    def __contains__(self, v: Sequence[int]) -> bool:
        return bool(self._mask[self.space.index(v)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.space == other.space and bool(np.array_equal(self._mask, other._mask))

    def __hash__(self) -> int:
        return hash((self.space, self._mask.tobytes()))

    def __repr__(self) -> str:
        return f"Code(H({self.space.n},{self.space.q}), size={self.size})"

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self._mask)

    def vertices(self) -> list[Vertex]:
        """Member vertices in lexicographic order."""
        return [self.space.vertex(int(i)) for i in self.indices()]

    def complement(self) -> "Code":
        return Code(self.space, ~self._mask)

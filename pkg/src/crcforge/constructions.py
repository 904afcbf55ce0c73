"""Builders for completely regular codes with covering radius 1 in H(3,q).

Six families, keyed by the second eigenvalue index i (gamma + beta = q*i):

- index1(q, m): initial-interval cylinder, i=1, gamma = m.
- a(q, gamma): even gamma, i=2; a stochastic grid set extended by a free position.
- b(q, variant): alphabet halving, i=2; lifts a two-symbol seed code to even q.
- c(q, t): i=2 with gamma = t odd in (q/2, q); splits symbols into low/high
  parts and glues three products along a stochastic set.
- d(q, witness): i=2 with odd gamma < q/2; three stochastic blocks whose sizes
  and degrees solve the witness equations.
- index3(q, m): union of m diagonal classes, i=3, gamma = 3m.

Every builder returns a plain Code; verification is a separate concern.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import stochastic
from .hamming import Code, Space
from .parameters import ConditionOneWitness, check_condition1, feasible_h3q
from .verifier import extend_code


@dataclass(frozen=True)
class ConstructionSpec:
    """A construction kind plus its integer parameters (for provenance/rebuild)."""

    kind: str
    params: tuple[tuple[str, int], ...]

    def as_dict(self) -> dict:
        return {"kind": self.kind, **{k: v for k, v in self.params}}


def build_index1(q: int, m: int) -> Code:
    """C = {0..m-1} x A x A in H(3,q): gamma = m, beta = q - m."""
    if not 1 <= m <= q - 1:
        raise ValueError(f"interval size m={m} must be in 1..{q - 1}")
    g = np.zeros((q, q, q), dtype=bool)
    g[:m, :, :] = True
    return Code(Space(3, q), g)


def build_index3(q: int, m: int) -> Code:
    """Union of m diagonal classes {x : x1+x2+x3 = d mod q}: gamma = 3m."""
    if not 1 <= m <= q - 1:
        raise ValueError(f"class count m={m} must be in 1..{q - 1}")
    i = np.arange(q)
    tot = (i[:, None, None] + i[None, :, None] + i[None, None, :]) % q
    return Code(Space(3, q), tot < m)


def build_a(q: int, gamma: int) -> Code:
    """Extend a stochastic grid set of total degree gamma (even) by a free
    first position: gamma stays, beta = 2q - gamma."""
    if gamma % 2 != 0:
        raise ValueError(f"gamma={gamma} must be even for the grid construction")
    if not 2 <= gamma <= 2 * q - 2:
        raise ValueError(f"gamma={gamma} out of range 2..{2 * q - 2}")
    grid = stochastic.build(q, q, gamma)
    code2 = stochastic.to_code(grid)
    return extend_code(code2, at_position=1)


_SEED1 = ((0, 0, 0), (1, 1, 1))
_SEED2 = ((0, 0, 0), (1, 0, 0), (0, 1, 1), (1, 1, 1))


def build_b(q: int, variant: int) -> Code:
    """Lift a binary seed through symbol parity: x is in C iff x mod 2
    (coordinatewise) lies in the seed.  Variant 1 seeds the repetition pair
    {000, 111}; variant 2 seeds the pairs with equal last two bits."""
    if q < 2 or q % 2 != 0:
        raise ValueError(f"alphabet size q={q} must be even")
    if variant not in (1, 2):
        raise ValueError(f"variant must be 1 or 2, got {variant}")
    seed = _SEED1 if variant == 1 else _SEED2
    lut = np.zeros((2, 2, 2), dtype=bool)
    for v in seed:
        lut[v] = True
    p = np.arange(q) % 2
    g = lut[p[:, None, None], p[None, :, None], p[None, None, :]]
    return Code(Space(3, q), g)


def build_c(q: int, t: int) -> Code:
    """Glue T x (A-T) x S, (A-T) x T x (A-S), and D x A along a stochastic set
    D in T x T of total degree 2t - q, where T = {0..t-1} and S = {0..q/2-1}.
    Gives gamma = t (odd allowed), beta = 2q - t."""
    if q % 2 != 0:
        raise ValueError(f"alphabet size q={q} must be even")
    if not q // 2 < t < q:
        raise ValueError(f"t={t} must satisfy q/2 < t < q (q={q})")
    in_t = np.arange(q) < t
    in_s = np.arange(q) < q // 2
    d = stochastic.build(t, t, 2 * t - q)
    dfull = np.zeros((q, q), dtype=bool)
    dfull[:t, :t] = d.cells
    t1 = in_t[:, None, None]
    t2 = in_t[None, :, None]
    s3 = in_s[None, None, :]
    g = (t1 & ~t2 & s3) | (~t1 & t2 & ~s3) | dfull[:, :, None]
    return Code(Space(3, q), g)


def construction_d_blocks(q: int, w: ConditionOneWitness
                          ) -> tuple[stochastic.GridSet, stochastic.GridSet, stochastic.GridSet]:
    """The three stochastic blocks realizing a witness: D1 in S x T with
    degrees (a,b), D2 in R x (A-T) with (a,c), D3 in (A-R) x (A-S) with (b,c)."""
    if not check_condition1(q, w):
        raise ValueError(f"witness {w.as_tuple()} violates the three-block system for q={q}")
    d1 = stochastic.build(w.s, w.t, w.a + w.b)
    d2 = stochastic.build(w.r, q - w.t, w.a + w.c)
    d3 = stochastic.build(q - w.r, q - w.s, w.b + w.c)
    return d1, d2, d3


def build_d(q: int, w: ConditionOneWitness) -> Code:
    """Three clique bundles over the blocks of construction_d_blocks:
    cliques free in position 1 over D1, in position 2 over D2, in position 3
    over D3.  Gives gamma = a + b + c, beta = 2q - gamma."""
    d1, d2, d3 = construction_d_blocks(q, w)
    g = np.zeros((q, q, q), dtype=bool)
    g[:, :w.s, :w.t] |= d1.cells[None, :, :]
    g[:w.r, :, w.t:] |= d2.cells[:, None, :]
    g[w.r:, w.s:, :] |= d3.cells[:, :, None]
    return Code(Space(3, q), g)


def build_from_spec(spec: ConstructionSpec) -> Code:
    p = spec.as_dict()
    kind = spec.kind
    if kind == "index1":
        return build_index1(p["q"], p["m"])
    if kind == "index3":
        return build_index3(p["q"], p["m"])
    if kind == "a":
        return build_a(p["q"], p["gamma"])
    if kind == "b":
        return build_b(p["q"], p["variant"])
    if kind == "c":
        return build_c(p["q"], p["t"])
    if kind == "d":
        w = ConditionOneWitness(p["r"], p["s"], p["t"], p["a"], p["b"], p["c"])
        return build_d(p["q"], w)
    raise ValueError(f"unknown construction kind {kind!r}")


def spec_for_witness(q: int, w: ConditionOneWitness) -> ConstructionSpec:
    return ConstructionSpec("d", (("q", q),) + tuple(zip("rstabc", w.as_tuple())))


def build_feasible(q: int, gamma: int, index: int) -> tuple[Code, ConstructionSpec]:
    """Dispatch to the builder designated for a feasible (gamma, index) in H(3,q)."""
    verdict = feasible_h3q(q, gamma, index)
    if not verdict.feasible:
        raise ValueError(f"no code with gamma={gamma}, index={index} in H(3,{q}): {verdict.rule}")
    if index == 1:
        return build_index1(q, gamma), ConstructionSpec("index1", (("q", q), ("m", gamma)))
    if index == 3:
        return build_index3(q, gamma // 3), ConstructionSpec("index3", (("q", q), ("m", gamma // 3)))
    if gamma % 2 == 0:
        return build_a(q, gamma), ConstructionSpec("a", (("q", q), ("gamma", gamma)))
    if 2 * gamma == q:
        return build_b(q, 1), ConstructionSpec("b", (("q", q), ("variant", 1)))
    if 2 * gamma > q:
        return build_c(q, gamma), ConstructionSpec("c", (("q", q), ("t", gamma)))
    return build_d(q, verdict.witness), spec_for_witness(q, verdict.witness)

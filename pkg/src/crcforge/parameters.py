"""Spectra of H(n,q) and parameter feasibility for covering-radius-1 codes.

The eigenvalues of H(n,q) are lambda_i = n(q-1) - q*i for i = 0..n.  A
completely regular code with rho = 1 has second eigenvalue n(q-1) - (gamma +
beta), so gamma + beta = q*i for an integer eigenvalue index i.  Feasibility
of (gamma, i) in H(3,q) splits by i; the delicate case is i = 2 with odd
gamma < q/2, governed by an integer system for a three-block construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np


def eigenvalue(n: int, q: int, i: int) -> int:
    """lambda_i(n,q) = n(q-1) - q*i."""
    if n < 1 or q < 2:
        raise ValueError(f"invalid dimensions n={n}, q={q}")
    if not 0 <= i <= n:
        raise ValueError(f"eigenvalue index {i} out of 0..{n}")
    return n * (q - 1) - q * i


def multiplicity(n: int, q: int, i: int) -> int:
    """Multiplicity of lambda_i in H(n,q): C(n,i) * (q-1)^i."""
    if not 0 <= i <= n:
        raise ValueError(f"eigenvalue index {i} out of 0..{n}")
    return math.comb(n, i) * (q - 1) ** i


@dataclass(frozen=True)
class ConditionOneWitness:
    """Solution of the three-block integer system for H(3,q), odd gamma < q/2.

    r, s, t are block sizes (0 < r,s,t < q); a, b, c are per-clique cell
    degrees of the three stochastic blocks, bounded by 0 < a <= min(r,s),
    0 < b <= min(t,q-r), 0 < c <= min(q-s,q-t), and tied by c*r = a*(q-t),
    b*(q-s) = c*(q-r), a*t = b*s.  The realized code has gamma = a+b+c.
    """

    r: int
    s: int
    t: int
    a: int
    b: int
    c: int

    @property
    def gamma(self) -> int:
        return self.a + self.b + self.c

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.r, self.s, self.t, self.a, self.b, self.c)


def product_identity(q: int, r: int, s: int, t: int) -> bool:
    """(q-s)*t*r = s*(q-t)*(q-r), the solvability condition on block sizes."""
    return (q - s) * t * r == s * (q - t) * (q - r)


def check_condition1(q: int, w: ConditionOneWitness) -> bool:
    """Verify every equation and bound of the three-block system."""
    r, s, t, a, b, c = w.as_tuple()
    if not (0 < r < q and 0 < s < q and 0 < t < q):
        return False
    if not (0 < a <= min(r, s)):
        return False
    if not (0 < b <= min(t, q - r)):
        return False
    if not (0 < c <= min(q - s, q - t)):
        return False
    return c * r == a * (q - t) and b * (q - s) == c * (q - r) and a * t == b * s


def solve_condition1(q: int, gamma: Union[int, None] = None) -> list[ConditionOneWitness]:
    """All witnesses for alphabet size q, ordered lexicographically by
    (r,s,t,a,b,c); optionally restricted to a+b+c = gamma.

    For fixed (r,s,t) the equations have a solution iff the product identity
    holds, and then all solutions are the integer multiples of one primitive
    triple (r*s, r*t, s*(q-t))/gcd, capped by the degree bounds.
    """
    if q < 2:
        raise ValueError(f"invalid alphabet size q={q}")
    rng = np.arange(1, q, dtype=np.int64)
    if rng.size == 0:
        return []
    r_ = rng[:, None, None]
    s_ = rng[None, :, None]
    t_ = rng[None, None, :]
    ok = (q - s_) * t_ * r_ == s_ * (q - t_) * (q - r_)
    out: list[ConditionOneWitness] = []
    for ri, si, ti in zip(*np.nonzero(ok)):
        r, s, t = int(ri) + 1, int(si) + 1, int(ti) + 1
        a0, b0, c0 = r * s, r * t, s * (q - t)
        g = math.gcd(a0, math.gcd(b0, c0))
        a0, b0, c0 = a0 // g, b0 // g, c0 // g
        kmax = min(min(r, s) // a0, min(t, q - r) // b0, min(q - s, q - t) // c0)
        if gamma is not None:
            step = a0 + b0 + c0
            if gamma % step == 0 and 1 <= gamma // step <= kmax:
                k = gamma // step
                out.append(ConditionOneWitness(r, s, t, k * a0, k * b0, k * c0))
        else:
            for k in range(1, kmax + 1):
                out.append(ConditionOneWitness(r, s, t, k * a0, k * b0, k * c0))
    return out


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    rule: str
    witness: Union[ConditionOneWitness, None] = None


def _check_normalized(q: int, gamma: int, index: int) -> None:
    if q < 2:
        raise ValueError(f"invalid alphabet size q={q}")
    if gamma < 1:
        raise ValueError(f"gamma={gamma} must be positive")
    if 2 * gamma > q * index:
        raise ValueError(
            f"gamma={gamma} violates the normalization gamma <= beta "
            f"(needs 2*gamma <= q*index = {q * index}); analyze the complement instead")


def feasible_h3q(q: int, gamma: int, index: int) -> FeasibilityVerdict:
    """Existence of a completely regular code in H(3,q) with rho = 1, the given
    gamma, and second eigenvalue lambda_index, under the convention gamma <= beta."""
    if index not in (1, 2, 3):
        raise ValueError(f"eigenvalue index {index} out of range 1..3 for rho=1 codes in H(3,q)")
    _check_normalized(q, gamma, index)

    if index == 1:
        return FeasibilityVerdict(True, "index 1: every gamma with 2*gamma <= q is realizable")

    if index == 2:
        if gamma % 2 == 0:
            return FeasibilityVerdict(True, "even gamma: stochastic grid set extended by a free position")
        if q % 2 == 1:
            return FeasibilityVerdict(False, "odd q admits only even gamma at eigenvalue index 2")
        if 2 * gamma >= q:
            return FeasibilityVerdict(True, "q even, q/2 <= gamma <= q: alphabet-split construction range")
        ws = solve_condition1(q, gamma)
        if ws:
            return FeasibilityVerdict(True, "q even, odd gamma < q/2: three-block system solvable", ws[0])
        return FeasibilityVerdict(False, "q even, odd gamma < q/2: three-block system has no solution")

    # index == 3
    if gamma % 3 == 0:
        return FeasibilityVerdict(
            True, "gamma divisible by 3: union of gamma/3 diagonal classes; "
                  "range 3 <= gamma <= 3q/2 because gamma + beta = 3q")
    return FeasibilityVerdict(False, "index 3 requires gamma divisible by 3")


def feasible_hnq(n: int, q: int, gamma: int) -> FeasibilityVerdict:
    """Existence at eigenvalue index 2 in H(n,q) for n >= 2 (gamma <= beta)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    _check_normalized(q, gamma, 2)
    if gamma % 2 == 0:
        return FeasibilityVerdict(True, "even gamma: stochastic grid set, extended to n positions")
    if n == 2:
        return FeasibilityVerdict(False, "n = 2 forces even gamma (per-column count is gamma/2)")
    if q % 2 == 1:
        return FeasibilityVerdict(False, "odd q admits only even gamma at eigenvalue index 2")
    if 2 * gamma >= q:
        return FeasibilityVerdict(True, "q even, gamma >= q/2: alphabet-split construction, extended")
    ws = solve_condition1(q, gamma)
    if ws:
        return FeasibilityVerdict(True, "q even, odd gamma < q/2: three-block system solvable", ws[0])
    return FeasibilityVerdict(False, "q even, odd gamma < q/2: three-block system has no solution")

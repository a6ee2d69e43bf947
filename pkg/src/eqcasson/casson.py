"""Casson-invariant calculus on surgered homology spheres.

Implements the surgery formula lambda(Y + (1/q) k) = lambda(Y) +
(q/2) Delta''(1), the Brieskorn-sphere value via equivariant signature
sums over the branch torus knot, and the mod-2 reductions to the Rohlin
invariant.
"""

from dataclasses import dataclass
from math import gcd

from .braid import torus_knot_matrix
from .errors import NonIntegralResult
from .laurent import second_derivative_at_one
from .seifert import signature_sum


@dataclass(frozen=True)
class BrieskornTriple:
    """Pairwise-coprime exponents of the Brieskorn sphere Sigma(p, q, r)."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        vals = (self.p, self.q, self.r)
        if any(v < 1 for v in vals):
            raise ValueError("exponents must be positive")
        for i in range(3):
            for j in range(i + 1, 3):
                if gcd(vals[i], vals[j]) != 1:
                    raise ValueError(f"{vals[i]} and {vals[j]} share a factor")


@dataclass(frozen=True)
class SurgerySpec:
    """Surgery description Sigma' = Y + (n/q) k."""

    lambda_y: int
    knot: object  # SeifertMatrix or BraidWord reference
    n: int
    q: int

    def __post_init__(self):
        if self.n < 1 or self.q == 0 or gcd(self.n, abs(self.q)) != 1:
            raise ValueError("need n >= 1, q != 0, gcd(n, q) = 1")


def casson_surgery(lambda_y, delta, q):
    """lambda(Y + (1/q) k) = lambda(Y) + (q/2) Delta''(1); exact integer."""
    dd = second_derivative_at_one(delta)
    return lambda_y + q * dd // 2


def casson_brieskorn(triple):
    """Casson invariant of Sigma(p, q, r) from equivariant signature sums.

    Equals (1/8) of the total Tristram-Levine signature sum of the
    right-handed (p, q) torus knot at the r-th roots of unity; invariant
    under permutations of the triple.  Degenerate triples containing a 1
    describe S^3 and give 0.
    """
    if isinstance(triple, tuple):
        triple = BrieskornTriple(*triple)
    p, q, r = triple.p, triple.q, triple.r
    if 1 in (p, q, r):
        return 0
    V = torus_knot_matrix(p, q, "right")
    total = signature_sum(V, r)
    if total % 8:
        raise NonIntegralResult(
            f"signature sum {total} for {triple} is not divisible by 8")
    return total // 8


def rohlin_from_casson(lam):
    """Rohlin invariant of a ZHS: the Casson invariant mod 2."""
    return lam % 2


def rohlin_surgery(rho_y, q, arf_k):
    """Rohlin surgery formula: rho(Y + (1/q) k) = rho(Y) + q * arf(k) mod 2."""
    return (rho_y + q * arf_k) % 2

"""Equivariant Casson invariants and their companion identities.

Implements the branched and free equivariant Casson formulas, the
Boyer-Nicas invariants lambda_w and their averaged version lambda-bar,
the mu-bar invariant of an involution with Montesinos branch knot, the
Floer Lefschetz-number relation, and the Arf-covering / Rohlin mod-2
consistency checks.  All values are exact (integers or Fractions).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import (CoverNotZHS, DoubleCoverNotZHS, NonIntegral,
                     NonIntegralResult, WOddN)
from .laurent import (cover_h1_order, fox_cover_polynomial, levine_arf,
                      second_derivative_at_one)
from .seifert import alexander, signature_sum, tl_signature

COVER_IS_ZHS = "CoverIsZHS"
CYCLICALLY_FINITE = "CyclicallyFinite"


def _check_nq(n, q):
    if n < 1:
        raise ValueError("n must be >= 1")
    if q == 0 or gcd(n, abs(q)) != 1:
        raise ValueError("q must be nonzero and coprime to n")


def hypothesis_flags(V, n):
    """Flags for the covering hypotheses of the surgery formulas.

    CoverIsZHS: the n-fold cyclic branched cover over the knot is an
    integral homology sphere.  CyclicallyFinite: no d-fold cover
    (d dividing n) has infinite first homology.
    """
    delta = alexander(V)
    flags = set()
    if cover_h1_order(delta, n) == 1:
        flags.add(COVER_IS_ZHS)
    if all(cover_h1_order(delta, d) != 0 for d in range(2, n + 1)
           if n % d == 0):
        flags.add(CYCLICALLY_FINITE)
    return flags


def eq_casson_branched(n, lambda_quotient, V):
    """Branched formula: n * lambda(quotient) + (1/8) * signature sum."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(n * lambda_quotient) + Fraction(signature_sum(V, n), 8)


def eq_casson_free(n, q, lambda_y, V):
    """Free formula: n*lambda(Y) + (1/8)*sum of signatures + (q/2)*Delta''(1).

    The total space of the surgered cover must be an integral homology
    sphere (cover_h1_order = 1); the result is then an exact integer.
    """
    _check_nq(n, q)
    delta = alexander(V)
    if cover_h1_order(delta, n) != 1:
        raise CoverNotZHS(
            f"{n}-fold cover order {cover_h1_order(delta, n)} != 1")
    val = (Fraction(n * lambda_y) + Fraction(signature_sum(V, n), 8)
           + Fraction(q * second_derivative_at_one(delta), 2))
    if val.denominator != 1:
        raise NonIntegralResult(f"free equivariant value {val} not integral")
    return int(val)


def boyer_nicas(w, n, q, lambda_y, V):
    """Boyer-Nicas invariant lambda_w of Y + (n/q) k as an exact rational.

    Even n: (n/2)*lambda(Y) + (1/8)*sum over levels m/n with m = w mod 2
    + (q/4)*Delta''(1).  Odd n (w must be 0): n*lambda(Y) + (1/8)*full sum
    + (q/2)*Delta''(1).  No integrality is claimed unless the ZHS-cover
    hypothesis holds (check hypothesis_flags).
    """
    _check_nq(n, q)
    if w not in (0, 1):
        raise ValueError("w must be 0 or 1")
    dd = second_derivative_at_one(alexander(V))
    if n % 2 == 0:
        part = sum(tl_signature(V, Fraction(m, n)) for m in range(n)
                   if m % 2 == w)
        return (Fraction(n * lambda_y, 2) + Fraction(part, 8)
                + Fraction(q * dd, 4))
    if w == 1:
        raise WOddN("w = 1 requires even n")
    return (Fraction(n * lambda_y) + Fraction(signature_sum(V, n), 8)
            + Fraction(q * dd, 2))


def lambda_tau(n, q, lambda_y, V):
    """lambda^tau as the sum of the defined lambda_w values."""
    if n % 2 == 0:
        return (boyer_nicas(0, n, q, lambda_y, V)
                + boyer_nicas(1, n, q, lambda_y, V))
    return boyer_nicas(0, n, q, lambda_y, V)


def boyer_lines_lambda_bar(n, q, lambda_y, V):
    """Averaged invariant: lambda(Y) + (1/8n)*sum + (q/2n)*Delta''(1).

    Satisfies n * lambda_bar = lambda_0 (odd n) or lambda_0 + lambda_1
    (even n); asserted on every call.
    """
    _check_nq(n, q)
    dd = second_derivative_at_one(alexander(V))
    bar = (Fraction(lambda_y) + Fraction(signature_sum(V, n), 8 * n)
           + Fraction(q * dd, 2 * n))
    assert n * bar == lambda_tau(n, q, lambda_y, V)
    return bar


def mu_bar(V_branch):
    """mu-bar of the involution with the given Montesinos branch knot.

    One eighth of the branch knot's total signature; defined only when the
    double branched cover is a ZHS (|Delta(-1)| = 1).
    """
    if V_branch.size and abs(alexander(V_branch)(-1)) != 1:
        raise DoubleCoverNotZHS(
            f"|Delta(-1)| = {abs(alexander(V_branch)(-1))} != 1")
    total = tl_signature(V_branch, Fraction(1, 2))
    if total % 8:
        raise NonIntegral(f"total signature {total} not divisible by 8")
    return total // 8


def floer_lefschetz(lam_tau):
    """Lefschetz number of the induced map on instanton Floer homology."""
    return 2 * lam_tau


def seifert_lefschetz_check(b1, b3, b5, b7, lam_tau):
    """Check -b1 + b3 - b5 + b7 = 2 * lambda^tau on external Floer ranks."""
    return -b1 + b3 - b5 + b7 == 2 * lam_tau


def tau_grading_sign(k):
    """Sign of the induced involution on Floer grading k (odd gradings)."""
    if k % 4 == 1:
        return 1
    if k % 4 == 3:
        return -1
    raise ValueError("grading must be odd")


def arf_cover_check(V, n):
    """arf of the lifted knot equals arf of the knot (ZHS covers)."""
    delta = alexander(V)
    lifted = fox_cover_polynomial(delta, n)
    return levine_arf(lifted) == levine_arf(delta)


def rohlin_reduction_check(n, q, lambda_y, V):
    """Mod-2 chain: free value = branched value + q * arf, both mod 2."""
    free = eq_casson_free(n, q, lambda_y, V)
    branched = eq_casson_branched(n, lambda_y, V)
    if branched.denominator != 1:
        raise NonIntegralResult(
            f"branched value {branched} not integral under ZHS hypothesis")
    a = levine_arf(alexander(V))
    return free % 2 == (int(branched) + q * a) % 2


@dataclass(frozen=True)
class EquivariantReport:
    """Bundle of the equivariant invariants of one surgery description."""

    lambda_tau: Fraction
    lambda_w: Optional[tuple]
    rho: int
    mu_bar: Optional[int]
    lefschetz: Fraction
    hypothesis_flags: frozenset


def equivariant_report(n, q, lambda_y, V):
    """Compute every defined invariant of Y + (n/q) k in one pass."""
    flags = hypothesis_flags(V, n)
    lt = lambda_tau(n, q, lambda_y, V)
    if n % 2 == 0:
        lw = (boyer_nicas(0, n, q, lambda_y, V),
              boyer_nicas(1, n, q, lambda_y, V))
    else:
        lw = (boyer_nicas(0, n, q, lambda_y, V),)
    try:
        mb = mu_bar(V)
    except (DoubleCoverNotZHS, NonIntegral):
        mb = None
    rho = int(lt) % 2 if lt.denominator == 1 else 0
    return EquivariantReport(
        lambda_tau=lt,
        lambda_w=lw,
        rho=rho,
        mu_bar=mb,
        lefschetz=floer_lefschetz(lt),
        hypothesis_flags=frozenset(flags),
    )

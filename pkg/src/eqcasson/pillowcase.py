"""Exact model of the torus double cover of the SU(2) pillowcase.

Coordinates (phi, psi) are rationals in [0, 2) measured in units of pi,
so the pillowcase involution is sigma(phi, psi) = (2 - phi, 2 - psi) and
the reducible locus is psi = 0.  The flat moduli curve of a (p, q) torus
knot consists of (p-1)(q-1) straight open arcs of slope -+pq whose
endpoints land on psi = 0 at the Alexander roots phi = k/pq.

Intersection counting with surgery lines psi = w - (n/q) phi and with the
vertical / horizontal test circles is done purely in rational arithmetic.
The two global orientation constants below were calibrated once on the
trefoil at (n, q) = (5, 1) and then frozen; the whole torus-knot battery
validates them.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import EndpointHit, NotCoprime

# Calibrated global signs (see module docstring): SIGMA_GLOBAL relates
# line counts to the Boyer-Nicas invariants (count = SIGMA_GLOBAL * 8 *
# lambda_w for even n, SIGMA_GLOBAL * 4 * lambda_0 for odd n);
# EPS_DECOMPOSITION enters the circle/psi=pi decomposition identity.
SIGMA_GLOBAL = -1
EPS_DECOMPOSITION = -1


def _mod2(x):
    return Fraction(x) % 2


@dataclass(frozen=True)
class PCPoint:
    """A point of the double cover, coordinates in [0, 2) units of pi."""

    phi: Fraction
    psi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "phi", _mod2(self.phi))
        object.__setattr__(self, "psi", _mod2(self.psi))

    def sigma(self):
        return PCPoint(-self.phi, -self.psi)


@dataclass(frozen=True)
class PCArc:
    """Open straight arc psi = slope * phi + offset (mod 2) over phi_interval.

    Both endpoints lie on the reducible circle psi = 0.
    """

    slope: int
    offset: Fraction
    phi_interval: tuple  # open (lo, hi), 0 <= lo < hi < 2
    orientation: int = 1

    def __post_init__(self):
        object.__setattr__(self, "offset", _mod2(self.offset))
        lo, hi = self.phi_interval
        object.__setattr__(self, "phi_interval",
                           (Fraction(lo), Fraction(hi)))
        if not 0 <= lo < hi < 2:
            raise ValueError("phi interval must satisfy 0 <= lo < hi < 2")
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +-1")
        for end in (lo, hi):
            if _mod2(self.slope * end + self.offset) != 0:
                raise ValueError("arc endpoint not on the reducible circle")

    def psi_at(self, phi):
        return _mod2(self.slope * phi + self.offset)

    def contains_phi(self, phi):
        lo, hi = self.phi_interval
        return lo < phi < hi

    def sigma(self):
        """Image arc under sigma(phi, psi) = (2 - phi, 2 - psi)."""
        lo, hi = self.phi_interval
        return PCArc(self.slope, -self.offset, (_mod2(-hi), _mod2(-lo)),
                     self.orientation)

    def to_dict(self):
        lo, hi = self.phi_interval
        return {"slope": self.slope, "offset": str(self.offset),
                "interval": [str(lo), str(hi)],
                "orientation": self.orientation}


@dataclass(frozen=True)
class PillowcaseCurve:
    """sigma-invariant arc system; the flat moduli curve of a knot."""

    arcs: tuple
    knot_tag: str = ""

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(self.arcs))

    def is_sigma_invariant(self):
        return set(self.arcs) == {a.sigma() for a in self.arcs}

    def sigma_image(self):
        return PillowcaseCurve(tuple(a.sigma() for a in self.arcs),
                               self.knot_tag)

    def to_dicts(self):
        return [a.to_dict() for a in self.arcs]


EMPTY_CURVE = PillowcaseCurve((), "empty")


def torus_knot_curve(p, q, hand="right"):
    """Flat moduli arcs of the (p, q) torus knot in the double cover.

    One arc for each pair (a, b) with 0 < a < p, 0 < b < q, a = b (mod 2):
    it spans phi in (|qa - pb|/pq, min(qa + pb, 2pq - qa - pb)/pq) with
    slope -pq (right hand; +pq left), offset forced by psi = 0 at the
    endpoints, plus its sigma image.  Total count (p-1)(q-1).
    """
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise NotCoprime(f"({p}, {q}) is not a coprime pair >= 2")
    if hand not in ("right", "left"):
        raise ValueError("hand must be 'right' or 'left'")
    slope = -p * q if hand == "right" else p * q
    arcs = []
    for a in range(1, p):
        for b in range(1, q):
            if (a - b) % 2:
                continue
            k1 = abs(q * a - p * b)
            k2 = min(q * a + p * b, 2 * p * q - (q * a + p * b))
            lo = Fraction(k1, p * q)
            hi = Fraction(k2, p * q)
            offset = _mod2(-slope * lo)
            arc = PCArc(slope, offset, (lo, hi), 1)
            arcs.append(arc)
            arcs.append(arc.sigma())
    curve = PillowcaseCurve(tuple(arcs), f"T({p},{q}),{hand}")
    assert len(curve.arcs) == (p - 1) * (q - 1)
    assert curve.is_sigma_invariant()
    return curve


def _arc_line_crossings(arc, n, q, w):
    """Exact crossing phis of the arc with the line n*phi + q*psi = q*w."""
    denom = n + arc.slope * q
    if denom == 0:
        # Parallel line and arc; any touching is non-transverse.
        if _mod2(q * (w - arc.offset)) == 0:
            raise EndpointHit("line is parallel to and meets an arc")
        return []
    lo, hi = arc.phi_interval
    sols = []
    # phi = (q(w - offset) + 2j) / denom for all integers j.
    base = Fraction(q * (w - arc.offset))
    jlo = (lo * denom - base) / 2
    jhi = (hi * denom - base) / 2
    if jlo > jhi:
        jlo, jhi = jhi, jlo
    for j in range(math.floor(jlo), math.ceil(jhi) + 1):
        phi = (base + 2 * j) / denom
        if phi == lo or phi == hi:
            raise EndpointHit(f"line meets arc endpoint at phi = {phi}")
        if lo < phi < hi:
            sols.append(phi)
    return sols


def intersect_line(curve, n, q, w):
    """Oriented count of curve crossings with psi = w*pi - (n/q) phi.

    The line is the closed torus curve n*phi + q*psi = q*w (mod 2),
    oriented so that a crossing with an arc of slope s counts
    sign(n + s*q) times the arc orientation.  Exact rational arithmetic;
    EndpointHit if the line meets an arc endpoint.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if q == 0 or gcd(n, abs(q)) != 1:
        raise ValueError("q must be nonzero and coprime to n")
    if w not in (0, 1):
        raise ValueError("w must be 0 or 1")
    total = 0
    for arc in curve.arcs:
        sols = _arc_line_crossings(arc, n, q, w)
        s = 1 if n + arc.slope * q > 0 else -1
        total += s * arc.orientation * len(sols)
    return total


def intersect_circle(curve, kind, value=None):
    """Oriented count with a test circle.

    kind='phi': the vertical circle phi = value; every transverse
    crossing counts the arc orientation.  kind='psi_pi': the horizontal
    circle psi = pi; a crossing with an arc of slope s counts
    sign(-s) times the arc orientation.
    """
    total = 0
    if kind == "phi":
        c0 = _mod2(value)
        for arc in curve.arcs:
            lo, hi = arc.phi_interval
            if c0 == lo or c0 == hi:
                raise EndpointHit(f"circle phi = {c0} meets an arc endpoint")
            if arc.contains_phi(c0):
                total += arc.orientation
        return total
    if kind != "psi_pi":
        raise ValueError("kind must be 'phi' or 'psi_pi'")
    for arc in curve.arcs:
        s = arc.slope
        if s == 0:
            continue
        lo, hi = arc.phi_interval
        base = Fraction(1 - arc.offset, s)
        step = Fraction(2, abs(s))
        # Solutions of s*phi + offset = 1 (mod 2) in (lo, hi).
        k0 = math.floor((lo - base) / step)
        k = k0
        while base + k * step <= hi + step:
            phi = base + k * step
            if phi == lo or phi == hi:
                raise EndpointHit("psi = pi circle meets an arc endpoint")
            if lo < phi < hi:
                total += (1 if -s > 0 else -1) * arc.orientation
            k += 1
    return total


def circle_union_count(curve, n, w):
    """Sum of vertical-circle counts over phi = (2j + w)/n, j = 0..n-1."""
    return sum(intersect_circle(curve, "phi", Fraction(2 * j + w, n))
               for j in range(n))


def decomposition_check(curve, n, q, w):
    """Verify the line count decomposes into circle and psi=pi terms.

    intersect_line = (union of vertical circles at phi = (2j + w)/n)
    + q * EPS_DECOMPOSITION * (psi = pi count).
    """
    lhs = intersect_line(curve, n, q, w)
    rhs = (circle_union_count(curve, n, w)
           + q * EPS_DECOMPOSITION * intersect_circle(curve, "psi_pi"))
    return lhs == rhs


def line_count_as_invariant(curve, n, q, w):
    """The Boyer-Nicas value encoded by the line count.

    Returns intersect_line / (SIGMA_GLOBAL * 8) for even n and
    / (SIGMA_GLOBAL * 4) for odd n, as an exact Fraction.
    """
    count = intersect_line(curve, n, q, w)
    div = 8 if n % 2 == 0 else 4
    return Fraction(count, SIGMA_GLOBAL * div)

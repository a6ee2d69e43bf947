"""Seifert-matrix calculus.

A Seifert matrix is a square integer matrix V with det(V - V^T) = 1.  This
module computes the Alexander polynomial det(tV - V^T) (normalized), the
Tristram-Levine signature at rational levels, total signature sums, the Arf
invariant, and the mirror / connected-sum operations.

Exactness discipline: nondegeneracy of the signature form at a level m/n is
certified exactly (cyclotomic divisibility for small matrices, a modular
determinant certificate for large ones) before any floating kernel runs;
then both a double-precision eigenvalue count and a high-precision MPFR
inertia oracle are evaluated and compared (see ``kernels.STATS``).
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from . import kernels
from .errors import (ExactnessError, NotAKnotMatrix, SignatureAtRoot)
from .laurent import (LaurentPoly, levine_arf, normalize,
                      second_derivative_at_one)

# Above this size the exact nondegeneracy gate switches from cyclotomic
# divisibility of the full Alexander polynomial to the modular certificate.
_GATE_EXACT_LIMIT = 30

_t = sympy.Symbol("t")


def _int_det(rows):
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer Seifert matrix; validated so that det(V - V^T) = 1."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        g = len(rows)
        if any(len(r) != g for r in rows):
            raise NotAKnotMatrix("matrix is not square")
        skew = [[rows[i][j] - rows[j][i] for j in range(g)] for i in range(g)]
        if _int_det(skew) != 1:
            raise NotAKnotMatrix("det(V - V^T) != 1")

    @property
    def size(self):
        return len(self.entries)

    def to_lists(self):
        return [list(r) for r in self.entries]

    def to_json(self):
        return json.dumps({"matrix": self.to_lists()})

    @classmethod
    def from_json(cls, text):
        return cls(tuple(map(tuple, json.loads(text)["matrix"])))

    def __repr__(self):
        return f"SeifertMatrix({self.to_lists()!r})"


UNKNOT = SeifertMatrix(())
RIGHT_TREFOIL = SeifertMatrix(((-1, 1), (0, -1)))
FIGURE_EIGHT = SeifertMatrix(((1, 1), (0, -1)))


def mirror(V):
    """Mirror image: -V^T.  Negates every Tristram-Levine signature."""
    g = V.size
    return SeifertMatrix(tuple(tuple(-V.entries[j][i] for j in range(g))
                               for i in range(g)))


def direct_sum(V, W):
    """Block sum; realizes the connected sum of the two knots."""
    g, h = V.size, W.size
    rows = [tuple(V.entries[i]) + (0,) * h for i in range(g)]
    rows += [(0,) * g + tuple(W.entries[i]) for i in range(h)]
    return SeifertMatrix(tuple(rows))


@lru_cache(maxsize=None)
def _alexander_cached(entries):
    g = len(entries)
    if g == 0:
        return normalize(LaurentPoly({0: 1}))
    # det(tV - V^T) has degree <= g; interpolate from g+1 integer points.
    ys = []
    for k in range(g + 1):
        M = [[k * entries[i][j] - entries[j][i] for j in range(g)]
             for i in range(g)]
        ys.append(_int_det(M))
    # Newton divided differences over the nodes 0..g (exact rationals).
    coef = [Fraction(y) for y in ys]
    for j in range(1, g + 1):
        for i in range(g, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / j
    # Expand Newton form prod (t - i) into monomial coefficients.
    poly = [Fraction(0)] * (g + 1)
    basis = [Fraction(1)]  # coefficients of prod_{i<j} (t - i)
    for j in range(g + 1):
        for d, b in enumerate(basis):
            poly[d] += coef[j] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for d, b in enumerate(basis):
            nxt[d] -= j * b
            nxt[d + 1] += b
        basis = nxt
    assert all(c.denominator == 1 for c in poly)
    return normalize(LaurentPoly({d: int(c) for d, c in enumerate(poly)}))


def alexander(V):
    """Normalized Alexander polynomial det(tV - V^T)."""
    return _alexander_cached(V.entries)


def arf(V):
    """Arf invariant via Levine's congruence on the Alexander polynomial."""
    return levine_arf(alexander(V))


@lru_cache(maxsize=None)
def _gate_nondegenerate(entries, d):
    """Exact proof that Delta has no root of order exactly d.

    Small matrices: the d-th cyclotomic polynomial must not divide an
    integer representative of Delta.  Large matrices: modular determinant
    certificate (exact when it answers True; a False answer after several
    primes is overwhelming evidence of a genuine root).
    """
    if d == 1:
        return False  # Delta(1) = 1 != 0, but level 0 is handled upstream
    if len(entries) <= _GATE_EXACT_LIMIT:
        coeffs, _ = _alexander_cached(entries).poly.integer_rep()
        f = sympy.Poly(list(reversed(coeffs)), _t)
        cyc = sympy.Poly(sympy.cyclotomic_poly(d, _t), _t)
        return not sympy.rem(f, cyc, _t).is_zero
    return kernels.modular_nondegeneracy_certificate(
        [list(r) for r in entries], d)


def as_level(alpha):
    """Coerce a level to an exact Fraction (accepts 'm/n' strings)."""
    if isinstance(alpha, str):
        return Fraction(alpha)
    return Fraction(alpha)


_sig_cache = {}

# |Delta(omega)| must exceed this when the gate certifies nondegeneracy.
_GATE_FLOAT_FLOOR_LOG2 = math.log2(1e-20)


def tl_signature(V, alpha):
    """Tristram-Levine signature at level alpha = m/n.

    Signature of (1 - e^{2 pi i alpha}) V + (1 - e^{-2 pi i alpha}) V^T,
    defined only when e^{2 pi i alpha} is not a root of the Alexander
    polynomial (checked exactly).  Periodic in alpha with period 1 and
    symmetric under alpha -> 1 - alpha; always even.
    """
    a = as_level(alpha) % 1
    if a == 0 or V.size == 0:
        return 0
    a = min(a, 1 - a)  # H(1 - a) is the conjugate form: same signature
    key = (V.entries, a)
    if key in _sig_cache:
        return _sig_cache[key]
    m, n = a.numerator, a.denominator
    if not _gate_nondegenerate(V.entries, n):
        raise SignatureAtRoot(
            f"Alexander polynomial vanishes at exp(2*pi*i*{m}/{n})")
    sig, n_zero, log2det = kernels.signature_dual_route(
        V.to_lists(), m, n, case_tag=("tl", V.entries))
    kernels.STATS.gate_checks += 1
    log2mag = kernels.log2_alexander_magnitude(V.size, log2det, m, n)
    if log2mag <= _GATE_FLOAT_FLOOR_LOG2:
        kernels.STATS.gate_disagreements += 1
    if n_zero != 0:
        raise ExactnessError(
            f"oracle found a numerical kernel at certified-nondegenerate "
            f"level {m}/{n}")
    assert sig % 2 == 0
    _sig_cache[key] = sig
    return sig


def signature_sum(V, n):
    """Sum of tl_signature(V, m/n) over m = 0..n-1; always even."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for m in range(1, n):
        total += tl_signature(V, Fraction(m, n))
    return total


def total_signature(V):
    """Ordinary knot signature: the level-1/2 Tristram-Levine signature."""
    return tl_signature(V, Fraction(1, 2))


def alexander_second_derivative(V):
    """Delta''(1) for the matrix's Alexander polynomial."""
    return second_derivative_at_one(alexander(V))


def random_seifert_matrix(rng, size, coeff_bound=2):
    """Random Seifert matrix of the given even size with V - V^T symplectic.

    The diagonal and the strictly-lower part are uniform in
    [-coeff_bound, coeff_bound]; the strictly-upper part is forced to
    L^T + (upper part of the standard symplectic form), which guarantees
    det(V - V^T) = 1.
    """
    if size % 2:
        raise ValueError("size must be even")
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = rng.randint(-coeff_bound, coeff_bound)
        for j in range(i):
            rows[i][j] = rng.randint(-coeff_bound, coeff_bound)
            rows[j][i] = rows[i][j]
    for b in range(size // 2):
        rows[2 * b][2 * b + 1] += 1
    return SeifertMatrix(tuple(map(tuple, rows)))

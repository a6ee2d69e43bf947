"""Numeric and modular kernels backing the signature computations.

Three independent engines live here:

* a double-precision eigenvalue signature (numpy ``eigvalsh``),
* a high-precision MPFR inertia oracle (C extension when built, gmpy2
  fallback otherwise) running at ``max(200, EQC_PRECISION_BITS)`` bits,
* an exact modular certificate of nondegeneracy for large matrices
  (nonzero determinant of V - r^{-1} V^T over a prime field containing
  the relevant root of unity).

Every signature call runs the first two and records any disagreement in
the module-wide ``STATS``; the verification suites require the mismatch
counter to stay at zero.
"""

import math
import os
from dataclasses import dataclass, field

import numpy as np
import sympy

try:
    from . import _inertia as _c_inertia
except ImportError:  # pragma: no cover - toolchain-dependent
    _c_inertia = None

from . import _inertia_py


def precision_bits():
    """Oracle working precision: floor from EQC_PRECISION_BITS, min 200."""
    try:
        floor = int(os.environ.get("EQC_PRECISION_BITS", "128"))
    except ValueError:
        floor = 128
    return max(200, floor)


@dataclass
class KernelStats:
    """Counters for the dual-route signature engine."""

    kernel_calls: int = 0
    oracle_calls: int = 0
    mismatches: int = 0
    mismatch_cases: list = field(default_factory=list)
    gate_checks: int = 0
    gate_disagreements: int = 0

    def reset(self):
        self.kernel_calls = 0
        self.oracle_calls = 0
        self.mismatches = 0
        self.mismatch_cases = []
        self.gate_checks = 0
        self.gate_disagreements = 0


STATS = KernelStats()


def float_inertia(entries, m, den):
    """Double-precision inertia of (1-cos t)A - i (sin t)B, t = 2 pi m/den.

    ``entries`` is the integer Seifert matrix as a nested list.  Zero
    tolerance is 2^-50 relative to the largest absolute eigenvalue.
    """
    V = np.array(entries, dtype=np.float64)
    g = V.shape[0] if V.ndim == 2 else 0
    if g == 0:
        return 0, 0, 0
    theta = 2.0 * math.pi * m / den
    A = V + V.T
    B = V - V.T
    H = (1.0 - math.cos(theta)) * A - 1j * math.sin(theta) * B
    w = np.linalg.eigvalsh(H)
    scale = max(np.max(np.abs(w)), 1e-300)
    tol = scale * 2.0 ** -50
    n_plus = int(np.sum(w > tol))
    n_minus = int(np.sum(w < -tol))
    return n_plus, n_minus, g - n_plus - n_minus


def oracle_inertia(entries, m, den, prec=None):
    """High-precision inertia plus log2|det H| via MPFR LDL^*."""
    g = len(entries)
    if g == 0:
        return 0, 0, 0, 0.0
    if prec is None:
        prec = precision_bits()
    a_flat, b_flat = [], []
    for i in range(g):
        for j in range(g):
            a_flat.append(entries[i][j] + entries[j][i])
            b_flat.append(entries[i][j] - entries[j][i])
    scale = max(1, max(abs(x) for x in a_flat + b_flat))
    tol = scale * g * 2.0 ** (-(prec // 2))
    impl = _c_inertia if _c_inertia is not None else _inertia_py
    return impl.hermitian_inertia(g, a_flat, b_flat, m, den, prec, tol)


def signature_dual_route(entries, m, den, case_tag=None):
    """Signature by both engines; oracle wins, disagreement is recorded.

    Returns ``(signature, n_zero, log2_absdet)`` from the oracle route.
    """
    fp, fm, fz = float_inertia(entries, m, den)
    STATS.kernel_calls += 1
    op, om, oz, log2det = oracle_inertia(entries, m, den)
    STATS.oracle_calls += 1
    if (fp, fm, fz) != (op, om, oz):
        STATS.mismatches += 1
        STATS.mismatch_cases.append(
            (case_tag, m, den, (fp, fm, fz), (op, om, oz)))
    return op - om, oz, log2det


def log2_alexander_magnitude(g, log2_absdet, m, den):
    """log2 |Delta(e^{2 pi i m/den})| from the oracle determinant.

    Uses det H = det((1-w)(V - conj(w) V^T)) so that
    |Delta(w)| = |det H| / |1 - w|^g.
    """
    if g == 0:
        return 0.0
    one_minus_w = abs(2.0 * math.sin(math.pi * m / den))
    return log2_absdet - g * math.log2(one_minus_w)


def _mod_p_det(M, p):
    """Determinant of an integer matrix mod p by vectorized elimination."""
    M = np.array(M, dtype=np.int64) % p
    g = M.shape[0]
    det = 1
    for col in range(g):
        piv = None
        for r in range(col, g):
            if M[r, col] % p:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            M[[col, piv]] = M[[piv, col]]
            det = (-det) % p
        inv = pow(int(M[col, col]), p - 2, p)
        det = det * int(M[col, col]) % p
        if col + 1 < g:
            factors = M[col + 1:, col] * inv % p
            M[col + 1:] = (M[col + 1:] - factors[:, None] * M[col]) % p
    return det


def _root_of_unity_mod(d, p):
    """An element of exact multiplicative order d in F_p (needs p = 1 mod d)."""
    e = (p - 1) // d
    for base in range(2, p):
        r = pow(base, e, p)
        if r == 1:
            continue
        ok = all(pow(r, d // f, p) != 1 for f in sympy.primefactors(d))
        if ok:
            return r
    raise RuntimeError("no primitive root found")  # pragma: no cover


def modular_nondegeneracy_certificate(entries, d, tries=3):
    """True iff det(V - r^{-1} V^T) != 0 mod p proves Delta(w_d) != 0.

    r is a root of the d-th cyclotomic polynomial modulo a prime
    p = 1 (mod d), so a nonzero determinant is an exact proof of
    nondegeneracy at every primitive d-th root of unity (the Galois
    orbit shares one conjugate value up to units).  A zero determinant
    is inconclusive for a single prime; after ``tries`` independent
    primes all vanish, returns False.
    """
    g = len(entries)
    if g == 0:
        return True
    V = [list(map(int, row)) for row in entries]
    p = 1_000_003
    for _ in range(tries):
        while p % d != 1 or not sympy.isprime(p):
            p += 1
        r = _root_of_unity_mod(d, p)
        rinv = pow(r, -1, p)
        M = [[(V[i][j] - rinv * V[j][i]) % p for j in range(g)]
             for i in range(g)]
        if _mod_p_det(M, p):
            return True
        p += 1
    return False

"""Randomized and exhaustive verification batteries.

Each suite checks one family of identities on generated or enumerated
inputs and returns a VerifyReport.  Suites are deterministic for a fixed
seed, and every suite additionally requires the signature kernel's
dual-route consistency counters to stay clean (no float/oracle
disagreements, no gate/magnitude disagreements).
"""

import itertools
import random
import time
from dataclasses import dataclass, field
from math import gcd

from . import equivariant as eq
from . import pillowcase as pc
from .braid import torus_knot_matrix
from .casson import casson_brieskorn, casson_surgery, rohlin_surgery
from .errors import SignatureAtRoot
from .kernels import STATS
from .laurent import (cover_h1_order, galois_check, levine_arf,
                      second_derivative_at_one)
from .seifert import alexander, random_seifert_matrix


@dataclass
class VerifyReport:
    suite: str
    cases: int
    failures: list = field(default_factory=list)
    seed: int = 0
    wall_time: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {"suite": self.suite, "cases": self.cases,
                "failures": self.failures, "seed": self.seed,
                "wall_time": round(self.wall_time, 3)}


def _fail(report, **kw):
    report.failures.append(dict(sorted(kw.items(), key=lambda i: i[0])))


def _random_matrices(rng, count, max_size=8):
    out = []
    for _ in range(count):
        size = 2 * rng.randint(1, max_size // 2)
        out.append(random_seifert_matrix(rng, size))
    return out


def _zhs_cases(rng, count, ns=(2, 3, 4, 5, 6), max_size=8, tries=20000):
    """Random (V, n) pairs whose n-fold branched cover is a ZHS."""
    cases = []
    for _ in range(tries):
        if len(cases) >= count:
            break
        V = _random_matrices(rng, 1, max_size)[0]
        n = rng.choice(ns)
        if cover_h1_order(alexander(V), n) == 1:
            cases.append((V, n))
    return cases


def suite_galois(seed=0, cases=200):
    """Galois congruences for the cover polynomial on filtered samples."""
    rng = random.Random(seed)
    report = VerifyReport("galois", 0, seed=seed)
    for V, n in _zhs_cases(rng, cases):
        report.cases += 1
        rep = galois_check(alexander(V), n)
        if not rep.passed:
            _fail(report, matrix=V.to_lists(), n=n,
                  D=rep.D_at_minus1, d=rep.d_at_minus1)
    return report


def suite_arf_cover(seed=0, cases=200):
    """arf is preserved by ZHS cyclic branched covers."""
    rng = random.Random(seed)
    report = VerifyReport("arf-cover", 0, seed=seed)
    for V, n in _zhs_cases(rng, cases):
        report.cases += 1
        if not eq.arf_cover_check(V, n):
            _fail(report, matrix=V.to_lists(), n=n)
    # Levine/Arf identities on unfiltered samples (residues, derivative).
    for V in _random_matrices(rng, max(cases, 500)):
        report.cases += 1
        d = alexander(V)
        if d(-1) % 8 not in (1, 5):
            _fail(report, matrix=V.to_lists(), residue=d(-1) % 8)
            continue
        if levine_arf(d) != (second_derivative_at_one(d) // 2) % 2:
            _fail(report, matrix=V.to_lists(), kind="arf != ddelta/2 mod 2")
    return report


def _surgery_cases(rng, count, max_size=6):
    cases = []
    zhs = _zhs_cases(rng, count, max_size=max_size)
    for V, n in zhs:
        q = rng.choice([x for x in (-3, -2, -1, 1, 2, 3)
                        if gcd(n, abs(x)) == 1])
        lam_y = rng.randint(-3, 3)
        cases.append((n, q, lam_y, V))
    return cases


def suite_rohlin(seed=0, cases=120):
    """Mod-2 reduction chain of the free equivariant Casson invariant."""
    rng = random.Random(seed)
    report = VerifyReport("rohlin", 0, seed=seed)
    for n, q, lam_y, V in _surgery_cases(rng, cases):
        report.cases += 1
        try:
            if not eq.rohlin_reduction_check(n, q, lam_y, V):
                _fail(report, n=n, q=q, lambda_y=lam_y, matrix=V.to_lists())
        except SignatureAtRoot:
            continue
    # Surgery-formula reduction: lambda mod 2 vs Rohlin surgery formula.
    for V in _random_matrices(rng, cases // 2):
        report.cases += 1
        d = alexander(V)
        q = rng.randint(-3, 3) or 1
        lam = rng.randint(-3, 3)
        lhs = casson_surgery(lam, d, q) % 2
        rhs = rohlin_surgery(lam % 2, q, levine_arf(d))
        if lhs != rhs:
            _fail(report, matrix=V.to_lists(), q=q, lam=lam)
    return report


def suite_boyer_nicas(seed=0, cases=120):
    """lambda_w sums against the free equivariant value, and lambda-bar."""
    rng = random.Random(seed)
    report = VerifyReport("boyer-nicas", 0, seed=seed)
    for n, q, lam_y, V in _surgery_cases(rng, cases):
        report.cases += 1
        try:
            free = eq.eq_casson_free(n, q, lam_y, V)
            if n % 2 == 0:
                lw = (eq.boyer_nicas(0, n, q, lam_y, V),
                      eq.boyer_nicas(1, n, q, lam_y, V))
            else:
                lw = (eq.boyer_nicas(0, n, q, lam_y, V),)
            bar = eq.boyer_lines_lambda_bar(n, q, lam_y, V)
        except SignatureAtRoot:
            continue
        if sum(lw) != free:
            _fail(report, n=n, q=q, lambda_y=lam_y, matrix=V.to_lists(),
                  kind="lambda_w sum != lambda_tau")
        if n * bar != sum(lw):
            _fail(report, n=n, q=q, lambda_y=lam_y, matrix=V.to_lists(),
                  kind="n * lambda_bar != lambda_w sum")
    return report


def suite_pillowcase(seed=0, cases=None):
    """Intersection counts against Boyer-Nicas values for torus knots."""
    report = VerifyReport("pillowcase", 0, seed=seed)
    knots = [(2, 3), (2, 5), (3, 4), (2, 7)]
    for p, q_t in knots:
        curve = pc.torus_knot_curve(p, q_t)
        V = torus_knot_matrix(p, q_t)
        if not curve.is_sigma_invariant():
            _fail(report, knot=(p, q_t), kind="not sigma invariant")
        for n in range(2, 9):
            for q in (-3, -2, -1, 1, 2, 3):
                if gcd(n, abs(q)) != 1:
                    continue
                for w in ((0, 1) if n % 2 == 0 else (0,)):
                    report.cases += 1
                    try:
                        bn = eq.boyer_nicas(w, n, q, 0, V)
                    except SignatureAtRoot:
                        continue
                    try:
                        got = pc.line_count_as_invariant(curve, n, q, w)
                        sigma_got = pc.line_count_as_invariant(
                            curve.sigma_image(), n, q, w)
                        decomp = pc.decomposition_check(curve, n, q, w)
                    except pc.EndpointHit:
                        _fail(report, knot=(p, q_t), n=n, q=q, w=w,
                              kind="EndpointHit at nondegenerate level")
                        continue
                    if got != bn:
                        _fail(report, knot=(p, q_t), n=n, q=q, w=w,
                              count=str(got), boyer_nicas=str(bn))
                    if sigma_got != got:
                        _fail(report, knot=(p, q_t), n=n, q=q, w=w,
                              kind="sigma image changed the count")
                    if not decomp:
                        _fail(report, knot=(p, q_t), n=n, q=q, w=w,
                              kind="decomposition identity failed")
    # psi = pi count magnitude is 2 * Delta''(1) for the trefoil.
    report.cases += 1
    tre = pc.torus_knot_curve(2, 3)
    if abs(pc.intersect_circle(tre, "psi_pi")) != 4:
        _fail(report, kind="trefoil psi=pi count magnitude != 4")
    return report


def suite_brieskorn(seed=0, cases=None, max_entry=15):
    """Permutation symmetry, frozen values, and surgery consistency."""
    report = VerifyReport("brieskorn", 0, seed=seed)
    triples = [(p, q, r)
               for p in range(2, max_entry + 1)
               for q in range(p + 1, max_entry + 1)
               for r in range(q + 1, max_entry + 1)
               if gcd(p, q) == 1 and gcd(p, r) == 1 and gcd(q, r) == 1]
    for tr in triples:
        report.cases += 1
        vals = {casson_brieskorn(perm)
                for perm in itertools.permutations(tr)}
        if len(vals) != 1:
            _fail(report, triple=tr, values=sorted(vals))
    for tr, expected in [((2, 3, 5), -1), ((2, 3, 7), -1), ((2, 3, 11), -2)]:
        report.cases += 1
        if casson_brieskorn(tr) != expected:
            _fail(report, triple=tr, expected=expected,
                  got=casson_brieskorn(tr))
    # Second path: iterated Casson surgery.  Sigma(p, q, r + pq) is
    # (-1)-surgery related to Sigma(p, q, r) over the (p, q) torus knot.
    for p, q in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]:
        d = alexander(torus_knot_matrix(p, q))
        for r in range(2, 13):
            if gcd(r, p * q) != 1:
                continue
            report.cases += 1
            lhs = casson_brieskorn((p, q, r + p * q))
            rhs = casson_surgery(casson_brieskorn((p, q, r)), d, -1)
            if lhs != rhs:
                _fail(report, p=p, q=q, r=r, kind="surgery consistency",
                      lhs=lhs, rhs=rhs)
            # E:seifert identity through the free equivariant formula.
            report.cases += 1
            free = eq.eq_casson_free(r, -1, 0, torus_knot_matrix(p, q))
            if free != lhs:
                _fail(report, p=p, q=q, r=r, kind="free formula identity",
                      free=free, brieskorn=lhs)
    return report


SUITES = {
    "galois": suite_galois,
    "arf-cover": suite_arf_cover,
    "rohlin": suite_rohlin,
    "boyer-nicas": suite_boyer_nicas,
    "pillowcase": suite_pillowcase,
    "brieskorn": suite_brieskorn,
}


def run_suite(name, seed=0, cases=None):
    """Run one suite (or 'all'); kernel counters must stay clean."""
    if name == "all":
        reports = []
        for key in SUITES:
            reports.append(run_suite(key, seed=seed, cases=cases))
        return reports
    fn = SUITES[name]
    mismatch0 = STATS.mismatches
    gate0 = STATS.gate_disagreements
    start = time.time()
    if cases is None:
        report = fn(seed=seed)
    else:
        report = fn(seed=seed, cases=cases)
    report.wall_time = time.time() - start
    if STATS.mismatches != mismatch0:
        _fail(report, kind="float/oracle signature mismatch",
              count=STATS.mismatches - mismatch0)
    if STATS.gate_disagreements != gate0:
        _fail(report, kind="nondegeneracy gate disagreement",
              count=STATS.gate_disagreements - gate0)
    return report

"""Command-line front end.

Every subcommand prints a single JSON document to standard output.
Exit codes: 0 on success, 1 on a domain error (the error name is echoed
in the document), 2 on usage errors.  Exact rationals are rendered as
"p/q" strings, never as floating point.
"""

import functools
import json
import sys
from fractions import Fraction

import click

from . import equivariant as eq
from . import pillowcase as pc
from . import verify as verify_mod
from .braid import (BraidWord, cork_branch_knot, seifert_matrix_of_closure,
                    torus_knot)
from .casson import (casson_brieskorn, casson_surgery, rohlin_from_casson)
from .errors import EqCassonError
from .laurent import fox_cover_polynomial, galois_check
from .seifert import SeifertMatrix, alexander, arf as seifert_arf, tl_signature


def _emit(doc):
    click.echo(json.dumps(doc, sort_keys=True))


def _rat(x):
    """Render an exact number as a plain-integer or p/q string."""
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def domain_errors(fn):
    """Translate domain errors into exit code 1 with the error name echoed."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except EqCassonError as exc:
            _emit({"error": exc.name, "message": str(exc)})
            sys.exit(1)

    return wrapper


def _parse_torus(text):
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise click.UsageError(f"--torus expects 'p,q', got {text!r}")
    return p, q


def knot_options(fn):
    fn = click.option("--torus", default=None,
                      help="Torus knot as 'p,q'.")(fn)
    fn = click.option("--hand", default="right",
                      type=click.Choice(["right", "left"]),
                      help="Torus-knot handedness.")(fn)
    fn = click.option("--braid", default=None,
                      help="Braid word, e.g. '2 | 1 1 1'.")(fn)
    fn = click.option("--seifert", default=None,
                      type=click.Path(exists=True, dir_okay=False),
                      help="JSON file holding {\"matrix\": [[...]]}.")(fn)
    fn = click.option("--cork", is_flag=True, default=False,
                      help="Use the Akbulut-cork branch knot.")(fn)
    return fn


def resolve_knot(torus, hand, braid, seifert, cork):
    given = [x for x in (torus, braid, seifert, cork or None) if x]
    if len(given) != 1:
        raise click.UsageError(
            "give exactly one of --torus, --braid, --seifert, --cork")
    if torus:
        p, q = _parse_torus(torus)
        return seifert_matrix_of_closure(torus_knot(p, q, hand))
    if braid:
        return seifert_matrix_of_closure(BraidWord.parse(braid))
    if cork:
        return seifert_matrix_of_closure(cork_branch_knot())
    with open(seifert) as fh:
        return SeifertMatrix.from_json(fh.read())


@click.group()
def main():
    """Exact invariants of knots and surgered homology spheres."""


@main.command("alexander")
@knot_options
@domain_errors
def alexander_cmd(torus, hand, braid, seifert, cork):
    """Normalized Alexander polynomial as [exponent, coefficient] pairs."""
    V = resolve_knot(torus, hand, braid, seifert, cork)
    _emit({"alexander": alexander(V).to_pairs()})


@main.command("signature")
@knot_options
@click.option("--alpha", default="1/2", help="Rational level m/n.")
@domain_errors
def signature_cmd(torus, hand, braid, seifert, cork, alpha):
    """Tristram-Levine signature at a rational level (default 1/2)."""
    V = resolve_knot(torus, hand, braid, seifert, cork)
    _emit({"sign": tl_signature(V, Fraction(alpha))})


@main.command("arf")
@knot_options
@domain_errors
def arf_cmd(torus, hand, braid, seifert, cork):
    """Arf invariant via Levine's congruence."""
    V = resolve_knot(torus, hand, braid, seifert, cork)
    _emit({"arf": seifert_arf(V)})


@main.command("foxcover")
@knot_options
@click.option("-n", "cover_n", type=int, required=True,
              help="Cover degree.")
@domain_errors
def foxcover_cmd(torus, hand, braid, seifert, cork, cover_n):
    """Alexander polynomial of the lifted knot in the n-fold cover."""
    V = resolve_knot(torus, hand, braid, seifert, cork)
    _emit({"foxcover": fox_cover_polynomial(alexander(V), cover_n).to_pairs()})


@main.command("galois")
@knot_options
@click.option("-n", "cover_n", type=int, required=True)
@domain_errors
def galois_cmd(torus, hand, braid, seifert, cork, cover_n):
    """Galois congruence report for the n-fold cover polynomial."""
    V = resolve_knot(torus, hand, braid, seifert, cork)
    rep = galois_check(alexander(V), cover_n)
    _emit({"D_at_minus1": rep.D_at_minus1, "d_at_minus1": rep.d_at_minus1,
           "ratio_residue": rep.ratio_residue, "pass": rep.passed})


@main.group("casson")
def casson_group():
    """Casson invariant calculus."""


@casson_group.command("brieskorn")
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.argument("r", type=int)
@domain_errors
def casson_brieskorn_cmd(p, q, r):
    """Casson invariant of the Brieskorn sphere Sigma(p, q, r)."""
    try:
        lam = casson_brieskorn((p, q, r))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit({"lambda": _rat(lam), "rho": rohlin_from_casson(lam)})


@casson_group.command("surgery")
@knot_options
@click.option("--lambda-y", type=int, default=0,
              help="Casson invariant of the base manifold Y.")
@click.option("-q", "surgery_q", type=int, required=True,
              help="Surgery coefficient 1/q.")
@domain_errors
def casson_surgery_cmd(torus, hand, braid, seifert, cork, lambda_y,
                       surgery_q):
    """Casson invariant of Y + (1/q) k by the surgery formula."""
    V = resolve_knot(torus, hand, braid, seifert, cork)
    lam = casson_surgery(lambda_y, alexander(V), surgery_q)
    _emit({"lambda": _rat(lam), "rho": rohlin_from_casson(lam)})


@main.group("eqcasson")
def eqcasson_group():
    """Equivariant Casson invariants."""


@eqcasson_group.command("branched")
@knot_options
@click.option("-n", "order_n", type=int, required=True)
@click.option("--lambda-quotient", type=int, default=0)
@domain_errors
def eq_branched_cmd(torus, hand, braid, seifert, cork, order_n,
                    lambda_quotient):
    """Branched formula: n * lambda(quotient) + (1/8) signature sum."""
    V = resolve_knot(torus, hand, braid, seifert, cork)
    _emit({"lambda_tau": _rat(eq.eq_casson_branched(order_n,
                                                    lambda_quotient, V))})


@eqcasson_group.command("free")
@knot_options
@click.option("-n", "order_n", type=int, required=True)
@click.option("-q", "surgery_q", type=int, required=True)
@click.option("--lambda-y", type=int, default=0)
@domain_errors
def eq_free_cmd(torus, hand, braid, seifert, cork, order_n, surgery_q,
                lambda_y):
    """Free formula for the total space of Y + (n/q) k."""
    V = resolve_knot(torus, hand, braid, seifert, cork)
    _emit({"lambda_tau": _rat(eq.eq_casson_free(order_n, surgery_q,
                                                lambda_y, V))})


@main.command("boyernicas")
@knot_options
@click.option("-w", "w_bit", type=click.IntRange(0, 1), default=0)
@click.option("-n", "order_n", type=int, required=True)
@click.option("-q", "surgery_q", type=int, required=True)
@click.option("--lambda-y", type=int, default=0)
@domain_errors
def boyernicas_cmd(torus, hand, braid, seifert, cork, w_bit, order_n,
                   surgery_q, lambda_y):
    """Boyer-Nicas invariant lambda_w with hypothesis flags."""
    V = resolve_knot(torus, hand, braid, seifert, cork)
    val = eq.boyer_nicas(w_bit, order_n, surgery_q, lambda_y, V)
    flags = sorted(eq.hypothesis_flags(V, order_n))
    _emit({"lambda_w": _rat(val), "flags": flags})


@main.command("lambdabar")
@knot_options
@click.option("-n", "order_n", type=int, required=True)
@click.option("-q", "surgery_q", type=int, required=True)
@click.option("--lambda-y", type=int, default=0)
@domain_errors
def lambdabar_cmd(torus, hand, braid, seifert, cork, order_n, surgery_q,
                  lambda_y):
    """Averaged Boyer-Lines invariant lambda-bar."""
    V = resolve_knot(torus, hand, braid, seifert, cork)
    val = eq.boyer_lines_lambda_bar(order_n, surgery_q, lambda_y, V)
    _emit({"lambda_bar": _rat(val)})


@main.command("mubar")
@knot_options
@domain_errors
def mubar_cmd(torus, hand, braid, seifert, cork):
    """mu-bar of the involution with this Montesinos branch knot."""
    V = resolve_knot(torus, hand, braid, seifert, cork)
    _emit({"mu_bar": _rat(eq.mu_bar(V))})


@main.command("lefschetz")
@click.option("--lambda-tau", type=int, required=True)
@click.option("--ranks", default=None,
              help="Odd Floer ranks as 'b1,b3,b5,b7'.")
@domain_errors
def lefschetz_cmd(lambda_tau, ranks):
    """Floer Lefschetz number 2 * lambda_tau, optionally checked."""
    doc = {"lefschetz": _rat(eq.floer_lefschetz(lambda_tau))}
    if ranks is not None:
        try:
            b1, b3, b5, b7 = (int(x) for x in ranks.split(","))
        except ValueError:
            raise click.UsageError("--ranks expects 'b1,b3,b5,b7'")
        doc["check"] = eq.seifert_lefschetz_check(b1, b3, b5, b7, lambda_tau)
    _emit(doc)


@main.group("pillowcase")
def pillowcase_group():
    """Pillowcase intersection counting."""


def _torus_curve_from_opts(torus, hand):
    if torus is None:
        raise click.UsageError("pillowcase commands require --torus")
    p, q = _parse_torus(torus)
    return pc.torus_knot_curve(p, q, hand)


@pillowcase_group.command("curve")
@click.option("--torus", required=True, help="Torus knot as 'p,q'.")
@click.option("--hand", default="right",
              type=click.Choice(["right", "left"]))
@domain_errors
def pc_curve_cmd(torus, hand):
    """Dump the arc system of a torus-knot moduli curve."""
    curve = _torus_curve_from_opts(torus, hand)
    _emit({"arcs": curve.to_dicts(), "knot": curve.knot_tag})


@pillowcase_group.command("count")
@click.option("--torus", required=True)
@click.option("--hand", default="right",
              type=click.Choice(["right", "left"]))
@click.option("-n", "order_n", type=int, required=True)
@click.option("-q", "surgery_q", type=int, required=True)
@click.option("-w", "w_bit", type=click.IntRange(0, 1), default=0)
@domain_errors
def pc_count_cmd(torus, hand, order_n, surgery_q, w_bit):
    """Oriented line intersection count and the invariant it encodes."""
    curve = _torus_curve_from_opts(torus, hand)
    count = pc.intersect_line(curve, order_n, surgery_q, w_bit)
    _emit({"count": count,
           "invariant": _rat(pc.line_count_as_invariant(
               curve, order_n, surgery_q, w_bit))})


@pillowcase_group.command("check")
@click.option("--torus", required=True)
@click.option("--hand", default="right",
              type=click.Choice(["right", "left"]))
@click.option("-n", "order_n", type=int, required=True)
@click.option("-q", "surgery_q", type=int, required=True)
@click.option("-w", "w_bit", type=click.IntRange(0, 1), default=0)
@domain_errors
def pc_check_cmd(torus, hand, order_n, surgery_q, w_bit):
    """Decomposition identity for one line against the test circles."""
    curve = _torus_curve_from_opts(torus, hand)
    _emit({"ok": pc.decomposition_check(curve, order_n, surgery_q, w_bit)})


@main.command("verify")
@click.argument("suite", type=click.Choice(sorted(verify_mod.SUITES) + ["all"]))
@click.option("--seed", type=int, default=0)
@click.option("--cases", type=int, default=None)
@domain_errors
def verify_cmd(suite, seed, cases):
    """Run a verification battery; exit 1 if any case fails."""
    result = verify_mod.run_suite(suite, seed=seed, cases=cases)
    reports = result if isinstance(result, list) else [result]
    _emit({"reports": [r.to_dict() for r in reports]})
    if any(not r.ok for r in reports):
        sys.exit(1)


if __name__ == "__main__":
    main()

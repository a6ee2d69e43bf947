"""Domain errors raised by the library.

Every error carries a stable ``name`` used verbatim by the command-line
front end, so scripted callers can match on it.
"""


class EqCassonError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self):
        return type(self).__name__


class UndefinedEvaluation(EqCassonError):
    """Evaluation at 0 of a Laurent polynomial with negative exponents."""


class NotNormalizable(EqCassonError):
    """No unit +-t^k makes the polynomial symmetric with value 1 at t = 1."""


class InvalidResidue(EqCassonError):
    """Value at -1 is 3 or 7 mod 8; not the polynomial of a knot."""


class CoverNotZHS(EqCassonError):
    """The cyclic branched cover is not an integral homology sphere."""


class NotAKnotMatrix(EqCassonError):
    """det(V - V^T) != 1."""


class SignatureAtRoot(EqCassonError):
    """Signature level hits a root of the Alexander polynomial."""


class NotAKnot(EqCassonError):
    """Braid closure has more than one component."""


class DisconnectedSurface(EqCassonError):
    """Some generator index is absent from the braid word."""


class NotCoprime(EqCassonError):
    """Torus-knot parameters are not coprime (or are out of range)."""


class NonIntegral(EqCassonError):
    """A quantity that must be an integer is not; invalid input or a bug."""


class NonIntegralResult(NonIntegral):
    """Integer-valued invariant came out fractional; signals an internal bug."""


class WOddN(EqCassonError):
    """w = 1 requested with odd n."""


class DoubleCoverNotZHS(EqCassonError):
    """|Delta(-1)| != 1, so the double branched cover is not a ZHS."""


class EndpointHit(EqCassonError):
    """A test curve on the pillowcase meets an arc endpoint."""


class ExactnessError(EqCassonError):
    """Floating kernel disagrees with its high-precision oracle; a bug."""

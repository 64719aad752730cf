"""Exception types shared across the package."""


class TwistbenchError(Exception):
    """Base class for all errors raised by this package."""


class BadReduction(TwistbenchError):
    """Point counting was asked for a prime where the model is singular."""


class NonMinimalModel(TwistbenchError):
    """The conductor certifies good reduction but the supplied equation is
    singular mod p, so the trace cannot be computed from this model."""


class NonSquarefree(TwistbenchError):
    """Twisting discriminant is zero or has a square factor."""


class UnsupportedForm(TwistbenchError):
    """Equation cannot be brought to short Weierstrass form."""


class InsufficientPrecision(TwistbenchError):
    """The available decimal expansion of pi is too short to certify the
    requested base-P digits."""


class IncompleteTable(TwistbenchError):
    """Trace table does not cover the primes required by the hash."""


class MissingData(TwistbenchError):
    """Record carries neither a usable trace table nor an equation."""


class EmptyTraining(TwistbenchError):
    """An empirical distribution was requested over zero curves."""


class DatasetTooSmall(TwistbenchError):
    """Not enough records to perform the requested split."""


class OrderingViolation(TwistbenchError):
    """Records were declared ascending by conductor but are not."""


class IngestError(TwistbenchError):
    """Malformed or invariant-violating input file; message carries the
    offending line number where applicable."""

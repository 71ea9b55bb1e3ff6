"""Exception hierarchy shared by every module.

Exit-code mapping used by the CLI:
  InputError / PreconditionError -> 2
  HypothesisNotMet               -> 1
  InvariantViolation             -> 3
"""


class GinvError(Exception):
    """Base class for all library errors."""


class DimensionError(GinvError):
    """Operands have incompatible shapes or live over different fields."""


class InputError(GinvError):
    """Malformed input document (bad JSON, bad field, bad entry syntax)."""


class PreconditionError(GinvError):
    """A caller-checkable precondition was violated (e.g. p not idempotent)."""


class HypothesisNotMet(GinvError):
    """A formula's hypothesis fails on this input; the formula does not apply.

    ``details`` carries enough structure to report which hypothesis failed
    (and, where useful, a witness such as the singular element).
    """

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


class InvariantViolation(GinvError):
    """An identity that should hold unconditionally failed.

    This is the "a theorem broke" error: it always carries a counterexample
    payload sufficient to replay the failure.
    """

    def __init__(self, message, **payload):
        super().__init__(message)
        self.payload = payload

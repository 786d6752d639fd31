"""Exception hierarchy shared by the library and the command line tool.

Exit codes: parse errors map to 1, violated preconditions to 2, and
failed internal re-verification (a bug, never silent) to 3.
"""


class SminfError(Exception):
    exit_code = 1


class ParseError(SminfError):
    """Malformed input document (bad JSON, bad schema, bad coefficient)."""

    exit_code = 1


class PreconditionError(SminfError):
    """Input violates a stated precondition of the requested operation."""

    exit_code = 2


class ShapeError(PreconditionError):
    pass


class FieldMismatchError(PreconditionError):
    pass


class SingularMatrixError(PreconditionError):
    pass


class ImproperInputError(PreconditionError):
    """An entry that must be proper (or strictly proper) is not."""


class KernelInclusionError(PreconditionError):
    """Completion requested for a map that does not respect the kernel."""


class VerificationError(SminfError):
    """A computed result failed its own exact re-verification."""

    exit_code = 3

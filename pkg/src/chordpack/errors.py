"""Exception hierarchy with stable machine-readable error codes."""


class ChordpackError(Exception):
    """Base class for all library errors; ``code`` is a stable identifier."""

    code = "ERROR"


class OutOfRangeError(ChordpackError):
    code = "OUT_OF_RANGE"


class SelfLoopError(ChordpackError):
    code = "SELF_LOOP"


class BadHeaderError(ChordpackError):
    code = "BAD_HEADER"


class BadLengthError(ChordpackError):
    code = "BAD_LENGTH"


class BadCharError(ChordpackError):
    code = "BAD_CHAR"


class EmptySetError(ChordpackError):
    code = "EMPTY_SET"


class TooLargeError(ChordpackError):
    code = "TOO_LARGE"


class BadParamsError(ChordpackError):
    code = "BAD_PARAMS"


class NoCollectionError(ChordpackError):
    code = "NO_COLLECTION"


class NotSpanningError(ChordpackError):
    code = "NOT_SPANNING"


class PreconditionError(ChordpackError):
    code = "PRECONDITION"


class BudgetExceededError(ChordpackError):
    code = "BUDGET_EXCEEDED"

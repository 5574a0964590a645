"""Exception hierarchy shared by every module.

Each error carries a stable ``code`` attribute so the command line can report
machine-readable failures.
"""


class QSchubertError(Exception):
    code = "Error"


class InputError(QSchubertError):
    """Raised for malformed or inadmissible user input (exit code 2)."""

    code = "InputError"


class BadShape(InputError):
    code = "BadShape"


class NotSymmetrizable(InputError):
    code = "NotSymmetrizable"


class RankMismatch(InputError):
    code = "RankMismatch"


class UnknownType(InputError):
    code = "UnknownType"


class IndexOutOfRange(InputError):
    code = "IndexOutOfRange"


class NotReduced(InputError):
    code = "NotReduced"


class NotBelow(InputError):
    code = "NotBelow"


class PreconditionViolated(InputError):
    code = "PreconditionViolated"


class NotAPermutation(InputError):
    code = "NotAPermutation"


class LengthMismatch(InputError):
    code = "LengthMismatch"


class MixedTori(InputError):
    code = "MixedTori"


class NotMonomial(InputError):
    code = "NotMonomial"


class SizeMismatch(InputError):
    code = "SizeMismatch"


class BoundExceeded(InputError):
    code = "BoundExceeded"


class UnknownSuite(InputError):
    code = "UnknownSuite"


class SchemaError(InputError):
    code = "SchemaError"


class InternalError(QSchubertError):
    """Raised when an internal consistency assertion fails."""

    code = "InternalError"


class UniquenessViolated(InternalError):
    code = "UniquenessViolated"


class PivotNotMonomial(InternalError):
    code = "PivotNotMonomial"


class DictionaryMismatch(InternalError):
    code = "DictionaryMismatch"

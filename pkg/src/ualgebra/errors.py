"""Exception types shared across the package."""


class UAlgebraError(Exception):
    """Base class for every error this package raises deliberately."""


class SignatureError(UAlgebraError):
    """Malformed signature definition: empty or duplicate name, bad arity."""


class InvalidSymbolError(UAlgebraError):
    """A symbol index or name does not belong to the governing signature."""


class SignatureMismatchError(UAlgebraError):
    """Values built over different signatures were mixed in one operation."""


class ArityMismatchError(UAlgebraError):
    """A symbol was applied to the wrong number of arguments."""

    def __init__(self, name, expected, given, position=None):
        msg = f"{name} expects {expected} argument(s), got {given}"
        if position is not None:
            msg += f" (at position {position})"
        super().__init__(msg)
        self.name = name
        self.expected = expected
        self.given = given
        self.position = position


class StatusMismatchError(UAlgebraError):
    """An oplist did not have the machine status an operation required."""


class InvalidTermError(UAlgebraError):
    """An oplist offered as a term does not have status ok(1)."""


class LimitExceededError(UAlgebraError):
    """A request went past a configured sanity limit."""


class CarrierMismatchError(UAlgebraError):
    """A carrier element, table, or mapping is out of range or incomplete."""


class BudgetExceededError(UAlgebraError):
    """A satisfaction check would need more evaluations than the budget."""


class TermSyntaxError(UAlgebraError):
    """The term parser rejected the input text."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownSymbolError(TermSyntaxError):
    """The input named a symbol the signature does not define."""

    def __init__(self, name, position):
        TermSyntaxError.__init__(self, f"unknown symbol {name!r}", position)
        self.name = name


class FormatError(UAlgebraError):
    """A JSON input file does not match its documented schema."""

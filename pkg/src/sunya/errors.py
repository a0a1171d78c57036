"""Exception types shared across the package."""


class SunyaError(Exception):
    """Base class for every error this package raises on purpose."""


class ParseError(SunyaError):
    """Input text is not a valid numeral or expression."""


class RangeError(SunyaError):
    """Value falls outside what the target notation can write."""


class AmbiguityError(SunyaError):
    """A gap-positional numeral admits more than one reading."""

    def __init__(self, message, readings=None):
        super().__init__(message)
        self.readings = list(readings) if readings is not None else []


class EvaluationError(SunyaError):
    """Base class for arithmetic evaluation failures.

    ``position`` is filled in by the expression evaluator: the tuple of
    child indexes leading from the root of the expression tree to the
    node whose operation failed.
    """

    def __init__(self, message, rule_id=None):
        super().__init__(message)
        self.rule_id = rule_id
        self.position = None


class DivisionByZero(EvaluationError):
    """Division by zero under modern semantics."""


class UndefinedBySource(EvaluationError):
    """The governing historical rule set does not define this operation."""


class DomainError(EvaluationError):
    """Operand outside the operation's domain, e.g. an imperfect root."""


class InexactQuotient(EvaluationError):
    """Signed-quantity division that would leave a remainder."""

"""Exception types raised across the package."""


class PhiBaseError(Exception):
    """Base class for all phibase errors."""


class NotAnInteger(PhiBaseError, ValueError):
    """A golden integer with a nonzero phi coefficient was asked for as an int."""


class NotPositive(PhiBaseError, ValueError):
    pass


class NonTerminating(PhiBaseError, RuntimeError):
    """The greedy encoder exceeded its iteration guard."""


class MalformedDigitString(PhiBaseError, ValueError):
    """Digit string fails the syntax ``[01]+ ('.' [01]+)?``."""

    def __init__(self, text: str, position: int, reason: str) -> None:
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"malformed digit string {text!r} at position {position}: {reason}")


class NonCanonical(PhiBaseError, ValueError):
    """Digit string is syntactically valid but not the canonical form."""

    def __init__(self, text: str, index: int, reason: str) -> None:
        self.text = text
        self.index = index
        self.reason = reason
        super().__init__(f"non-canonical digit string {text!r} at index {index}: {reason}")


class InvalidDigits(PhiBaseError, ValueError):
    pass


class InvalidGaps(PhiBaseError, ValueError):
    pass

"""
Exceptions raised by the classification library.

Everything derives from :class:`TSGError`, itself a ``ValueError``, so callers
that only care about bad input can keep catching ``ValueError``.
"""


class TSGError(ValueError):
    pass


class DomainError(TSGError):
    """A numeric precondition (range of n, m, ...) does not hold."""


class GroupSyntaxError(TSGError):
    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected
        found = repr(text[position]) if position < len(text) else "end of input"
        super().__init__(f"Cannot parse group {text!r}: expected {expected} at position {position}, found {found}")


class OutOfUniverseError(TSGError):
    """The descriptor names a group outside the supported naming universe."""


class ContractViolation(TSGError):
    """A family-specific checker received a descriptor it does not handle."""


class PermutationError(TSGError):
    pass


class InconsistentOrderError(TSGError):
    pass


class CatalogNotFoundError(TSGError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class CatalogFormatError(TSGError):
    def __init__(self, path, line_number, message):
        self.path = path
        self.line_number = line_number
        super().__init__(f"{path}:{line_number}: {message}")

"""Exception types shared across the package."""


class LexisError(Exception):
    """Base class for all package errors."""


class LengthError(LexisError):
    """Two words that must have equal length do not."""


class PositionError(LexisError):
    """An edit position falls outside the word."""


class CapacityError(LexisError):
    """A linear-probing table refused an insert past its occupancy ceiling."""


class CompactedError(LexisError):
    """Mutation attempted on a compacted (frozen) index."""


class ParseError(LexisError):
    """A dictionary entry could not be parsed."""


class ParameterError(LexisError):
    """A query parameter is out of its allowed range."""


class NotFoundError(LexisError):
    """A word expected to be in the lexicon is absent."""

"""Exception types shared across the package."""


class EflError(Exception):
    """Base class for all errors raised by this library."""


class ParseError(EflError):
    """Instance text violates the ``.efl`` grammar or describes an illegal cover."""


class UnknownVertexError(EflError):
    """A vertex token does not occur in the instance."""


class InvalidInstanceError(EflError):
    """The operation requires an instance satisfying the clique-cover invariants."""


class IncompleteColoringError(EflError):
    """A coloring required to be total is missing some vertex of the instance."""


class InconsistentBlockError(EflError):
    """A vertex's matrix cell block holds more than one color; indicates an engine bug."""


class ExtensionError(EflError):
    """A core coloring repeats a color inside some clique, so no extension exists."""


class CoreSizeLimitError(EflError):
    """The core graph exceeds the configured exact-search vertex limit."""

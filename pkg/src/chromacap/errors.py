"""Exception types shared across the package."""


class ChromacapError(Exception):
    """Base class for every error raised by this library."""


class DomainError(ChromacapError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParseError(ChromacapError, ValueError):
    """A palette document could not be parsed; the message carries line/field diagnostics."""


class SizedOnlyPaletteError(ChromacapError):
    """A distance-based operation was applied to a palette that has no explicit colors."""


class TooFewColorsError(ChromacapError):
    """An operation that needs at least one color pair got a smaller palette."""


class UnknownPaletteError(ChromacapError):
    """The requested name is not in the built-in palette registry."""


class MissingAccuracyError(ChromacapError):
    """A comparison involving a sized-only palette was attempted without a supplied accuracy cost."""


class TooLargeError(ChromacapError):
    """The exhaustive search space exceeds the tractability guard."""

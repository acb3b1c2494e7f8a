"""Exception types shared across the package."""


class BwtexError(Exception):
    """Base class for all package errors."""


class InvalidSpec(BwtexError):
    """A texture spec violates its invariants (non-positive density/size, bad enum, ...)."""


class UnknownGlyph(BwtexError):
    """An icon texture references a glyph id that the registry cannot resolve."""


class MismatchedDataset(BwtexError):
    """Dataset keys do not match the chart's categories."""


class EmptyPie(BwtexError):
    """A pie chart was asked to render values that sum to zero."""


class MissingRegions(BwtexError):
    """A map chart has no region geometry."""


class OutOfRange(BwtexError):
    """An index or value is outside its documented range."""


class BadItemCount(BwtexError):
    """A rating row does not carry exactly five scale items."""


class TooFewSamples(BwtexError):
    """Resampling needs at least two observations."""


class UnpairedParticipant(BwtexError):
    """Within-subject comparison got conditions with differing participant sets."""


class EmptyAfterExclusion(BwtexError):
    """An exclusion policy removed every participant."""


class DuplicateRankFirst(BwtexError):
    """A participant marked more than one design as ranked first within a block."""


class UnknownCategory(BwtexError):
    """An edit action referenced a category that is not part of the chart."""


class InvalidProperty(BwtexError):
    """An edit action referenced a property path or value that cannot be applied."""


class SessionNotFound(BwtexError):
    """No live edit session with the requested id."""


class DegenerateInsetWarning(UserWarning):
    """Halo plus outline inset swallowed a shape entirely; texture area is empty."""

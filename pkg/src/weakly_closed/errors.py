"""Exception hierarchy.

Every error raised on purpose by the package derives from ``WeaklyClosedError``
so the CLI can map whole families onto exit codes.
"""


class WeaklyClosedError(Exception):
    pass


class InputError(WeaklyClosedError, ValueError):
    """Bad user-supplied graph, labeling or parameter."""


class VertexOutOfRange(InputError):
    pass


class LoopEdge(InputError):
    pass


class NTooLarge(InputError):
    pass


class MalformedGraph6(InputError):
    pass


class EmptySet(InputError):
    pass


class SizeMismatch(InputError):
    pass


class NotAnEdge(InputError):
    pass


class PositionOutOfRange(InputError):
    pass


class IllegalInterchange(WeaklyClosedError):
    """The two values being swapped are not adjacent in the graph."""


class PreconditionViolated(WeaklyClosedError):
    pass


class BudgetExceeded(WeaklyClosedError):
    """A Groebner computation outgrew its configured size caps."""


# name used by the classification front end
FPureBudgetExceeded = BudgetExceeded


class DivisionNotExact(WeaklyClosedError):
    """Internal consistency failure in exact polynomial division."""

"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class EquidissectError(Exception):
    """Base class. ``code`` is the stable name emitted in error JSON."""

    code = "Error"


class PreconditionError(EquidissectError, ValueError):
    code = "PreconditionError"


class NotLattice(PreconditionError):
    code = "NotLattice"


class NotACycle(EquidissectError):
    code = "NotACycle"


class NotInSubgroup(PreconditionError):
    code = "NotInSubgroup"


class NotParallelogram(PreconditionError):
    code = "NotParallelogram"


class ZeroCoordinate(PreconditionError):
    code = "ZeroCoordinate"


class BudgetExceeded(EquidissectError):
    """Search stopped at its node cap. ``partial`` holds what was found so far."""

    code = "BudgetExceeded"

    def __init__(self, message, partial=(), nodes=0):
        super().__init__(message)
        self.partial = list(partial)
        self.nodes = nodes


class UnequalAreas(EquidissectError):
    code = "UnequalAreas"

    def __init__(self, message, areas=()):
        super().__init__(message)
        self.areas = list(areas)


class ParseError(EquidissectError, ValueError):
    """Malformed input document (CLI exit status 2)."""

    code = "ParseError"

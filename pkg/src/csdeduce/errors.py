"""Exception hierarchy.

Every error raised on purpose by the library derives from ``LogicError`` (itself
a ``ValueError``), so callers can catch the whole family at once.
"""


class LogicError(ValueError):
    pass


class IncompleteAssignment(LogicError):
    def __init__(self, missing=()):
        self.missing = tuple(sorted(missing))
        super().__init__(f"incomplete assignment (unassigned: {list(self.missing)})")


class OracleLimit(LogicError):
    def __init__(self, nvars, cap):
        super().__init__(f"oracle limit: {nvars} variables exceeds cap {cap}")


class CapacityError(LogicError):
    """A materialization or enumeration would exceed its configured cap."""


class EmptyClauseError(LogicError):
    pass


class SelectionError(LogicError):
    pass


class ShrinkError(LogicError):
    pass


class NotAWitness(LogicError):
    pass


class NotRefutationCovering(LogicError):
    pass


class TriangleError(LogicError):
    pass


class ShapeViolation(TriangleError):
    pass


class SeparationError(LogicError):
    pass


class ParseError(LogicError):
    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = f"line {line}: " if line is not None else ""
        if field:
            where += f"{field}: "
        super().__init__(where + message)

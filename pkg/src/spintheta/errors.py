"""Exception hierarchy.

Input problems (bad table files, unknown names) derive from ``ValueError``;
numerical consistency failures derive from :class:`ConsistencyError` so the
CLI can map them to distinct exit codes.
"""


class ParseError(ValueError):
    """Malformed multiplication-table text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ConsistencyError(ArithmeticError):
    """A quantity that must be real/symmetric/antisymmetric is not."""


class SymmetryError(ConsistencyError):
    pass


class RealnessError(ConsistencyError):
    pass


class MetricError(ConsistencyError):
    """<a, b> is not a multiple of the identity."""

    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)

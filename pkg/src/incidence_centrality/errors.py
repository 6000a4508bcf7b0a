"""Exception types. Each maps to its own CLI exit code."""


class CentralityError(Exception):
    """Base class for errors raised by this package."""

    exit_code = 1


class GraphError(CentralityError, ValueError):
    """Invalid graph, hypergraph or incidence matrix."""

    exit_code = 4


class DisconnectedGraphError(GraphError):
    """An operation that requires a connected graph got a disconnected one."""

    exit_code = 5


class SpectralError(CentralityError, ValueError):
    """Invalid input to the spectral routines (non-finite entries, bad config)."""

    exit_code = 6


class UndefinedCorrelation(CentralityError, ValueError):
    """Pearson correlation of a constant vector."""

    exit_code = 6


class ParseError(CentralityError, ValueError):
    """Malformed input file; carries the 1-based line and column."""

    exit_code = 3

    def __init__(self, message, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)

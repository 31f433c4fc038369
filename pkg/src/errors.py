# Error hierarchy
# ===============
#
# Library code raises these; only the command line front end turns them into
# messages and exit codes.


class OddColorError(Exception):
    """Base class for every error raised by the package."""

    exit_code: int = 1


class VerificationFailed(OddColorError):
    """A coloring does not induce odd subgraphs."""

    exit_code = 1


class PreconditionError(OddColorError):
    """Input violates the hypothesis of the requested operation."""

    exit_code = 2


class PartialColoringError(PreconditionError):
    """A coloring leaves some edge uncolored or colors a non-edge."""


class W4Exception(PreconditionError):
    """The wheel with four spokes, the one graph the dominating-vertex construction excludes."""

    def __init__(self, message: str = "exception: W_4"):
        super().__init__(message)


class PathsNotFound(PreconditionError):
    """Fewer disjoint paths exist than were requested."""


class ParseError(OddColorError):
    exit_code = 3

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(OddColorError):
    """A configured resource budget ran out before the search finished."""

    exit_code = 4


class SearchBudgetExceeded(BudgetExceeded):
    pass


class FixtureBudgetExceeded(BudgetExceeded):
    pass


class InternalFault(OddColorError):
    """A search came back empty where the theory guarantees a witness."""

    exit_code = 70

"""Exception types raised across sgline."""


class SglineError(Exception):
    """Base class for all library errors."""


class ParseError(SglineError, ValueError):
    """Malformed sg, vsign, or plan text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownEdge(SglineError, KeyError):
    pass


class InvalidPath(SglineError, ValueError):
    """A PathElement does not describe a path or circle of the given graph."""


class CircleCapExceeded(SglineError):
    """More circles exist than the caller allowed; use a smaller instance."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"more than {cap} circles")


class NotSimple(SglineError, ValueError):
    pass


class Not2Connected(SglineError, ValueError):
    pass


class InternalInconsistency(SglineError, AssertionError):
    """Two independent algorithms disagreed; this is always a bug."""


class InvalidPlan(SglineError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        lines = "\n".join(str(v) for v in self.violations)
        super().__init__(f"invalid plan:\n{lines}")


class InvalidCut(InvalidPlan):
    pass


class PropertyViolated(SglineError, ValueError):
    """Recovery was asked for a signed graph that fails the local degree property."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__(
            "graph fails the local degree property at vertices "
            + ", ".join(str(v.vertex) for v in self.violations)
        )


class RetryBudgetExhausted(SglineError, RuntimeError):
    pass

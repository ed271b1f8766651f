"""Exception hierarchy shared by the solvers and the CLI."""


class TUIntersectError(Exception):
    """Base class for every error raised by this package."""


class InvalidInstance(TUIntersectError, ValueError):
    pass


class EntryOutOfRange(InvalidInstance):
    """A matrix entry outside {-1, 0, 1}; such a matrix cannot be totally unimodular."""

    def __init__(self, row: int, col: int, value: int):
        self.row, self.col, self.value = row, col, value
        super().__init__(f"entry A[{row}][{col}] = {value} is not in {{-1, 0, 1}}")


class UnbalancedSides(InvalidInstance):
    def __init__(self, left: int, right: int):
        self.left, self.right = left, right
        super().__init__(f"bipartite sides differ in size: {left} left vs {right} right")


class DimensionMismatch(TUIntersectError, ValueError):
    pass


class Infeasible(TUIntersectError):
    """No feasible solution exists."""


class Unbounded(TUIntersectError):
    """Raised by the LP solver; only possible when some variable has no upper bound."""


class NonIntegralEntry(TUIntersectError):
    def __init__(self, index: int, value):
        self.index, self.value = index, value
        super().__init__(f"entry {index} = {value} is not integral")


class PreconditionViolated(TUIntersectError, ValueError):
    pass


class InternalInfeasible(TUIntersectError):
    """A rounding LP that must be feasible for a TU matrix turned out infeasible."""


class NonMonotoneWeights(TUIntersectError, ValueError):
    pass


class LengthMismatch(TUIntersectError, ValueError):
    pass


class TooManySolutions(TUIntersectError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"more than {cap} feasible solutions")


class DimensionTooLarge(TUIntersectError):
    pass


class BudgetExceeded(TUIntersectError):
    pass

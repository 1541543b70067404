"""Exception types shared across the package."""


class ClusterCrystalError(Exception):
    pass


class NotDivisible(ClusterCrystalError, ArithmeticError):
    """Raised when an exact Laurent division leaves a remainder."""


class IndexOutOfRange(ClusterCrystalError, IndexError):
    pass


class UnsupportedRep(ClusterCrystalError, ValueError):
    pass


class RepMismatch(ClusterCrystalError, ValueError):
    pass


class NotHighest(ClusterCrystalError, ValueError):
    pass


class BudgetExceeded(ClusterCrystalError, RuntimeError):
    pass


class OutOfRange(ClusterCrystalError, ValueError):
    pass


class InvariantViolation(ClusterCrystalError, AssertionError):
    """An internal consistency check failed."""

"""Exception hierarchy. Every domain error is a ValueError with a readable message."""


class QuiverlabError(ValueError):
    """Base class for all domain errors raised by the library."""

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "message": str(self)}


class GuardExceeded(QuiverlabError):
    def __init__(self, guard: str, limit: int, value: int):
        self.guard = guard
        self.limit = limit
        self.value = value
        super().__init__(f"Guard {guard} exceeded: {value} > {limit}")

    def to_dict(self) -> dict:
        d = super().to_dict()
        d.update({"guard": self.guard, "limit": self.limit, "value": self.value})
        return d


class NotAPermutation(QuiverlabError):
    pass


class NotCompatible(QuiverlabError):
    pass


class NotMinimal(QuiverlabError):
    pass


class NotSymmetric(QuiverlabError):
    pass


class NonStrictPartition(QuiverlabError):
    pass


class NotDivisible(QuiverlabError):
    def __init__(self, remainder, message: str | None = None):
        self.remainder = remainder
        super().__init__(message or f"Inexact division, remainder witness: {remainder}")


class MissingTableEntry(QuiverlabError):
    def __init__(self, u):
        self.u = u
        super().__init__(f"Coefficient table has no entry for u = {list(u.one_line)}")

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["u"] = list(self.u.one_line)
        return d


class InconsistentSystem(QuiverlabError):
    pass


class ConstraintViolated(QuiverlabError):
    pass


class DimensionMismatch(QuiverlabError):
    pass


class RankViolation(QuiverlabError):
    def __init__(self, violation: dict):
        self.violation = violation
        super().__init__(f"Rank conditions do not occur: {violation['message']}")


class InvariantViolation(AssertionError):
    """A postcondition failed. This is a bug, never a bad input."""

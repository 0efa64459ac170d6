"""Exception types shared by all raneyseq modules."""


class RaneyseqError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(RaneyseqError):
    """A parameter is outside its admissible range (e.g. k < 2, l > k-2)."""


class NotIncreasingError(RaneyseqError):
    """A candidate threshold sequence is not strictly increasing."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"sequence not strictly increasing at index {index}")


class BoundViolationError(RaneyseqError):
    """A candidate threshold sequence violates k*i + d <= s_i <= k*n + l + d."""

    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"value {value} at index {index} violates threshold bounds")


class UnreachableLabelError(RaneyseqError):
    """An internal-node label lies below the reachable labels of a w-tree."""

    def __init__(self, label: int):
        self.label = label
        super().__init__(f"label {label} is unreachable in the w-tree")


class BudgetExceededError(RaneyseqError):
    """An enumeration produced more objects than the caller-supplied cap."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"enumeration budget of {budget} objects exceeded")


class MalformedWordError(RaneyseqError):
    """A ballot word does not have the shape A (A^m1 B)(A^m2 B)...(A^mn B)."""


class HeightExceedsLimitError(RaneyseqError):
    """A path ends above the requested level l."""

    def __init__(self, height: int, limit: int):
        self.height = height
        self.limit = limit
        super().__init__(f"path ends at height {height}, above the limit {limit}")


class EmptyTupleError(RaneyseqError):
    """An all-trivial tree tuple has no corresponding sequence."""

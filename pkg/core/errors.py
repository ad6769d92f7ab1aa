"""
Posetkit - Exceptions

Exception hierarchy shared by all core modules and the command layer.
"""

from typing import List, Optional


class PosetkitError(Exception):
    """Base exception for toolkit operations."""
    pass


class DuplicateName(PosetkitError):
    """Raised when an element name occurs twice."""
    pass


class UnknownName(PosetkitError):
    """Raised when a cover or argument names an element that does not exist."""
    pass


class CycleDetected(PosetkitError):
    """Raised when a cover relation closes a cycle."""

    def __init__(self, cycle: List[str]):
        self.cycle = list(cycle)
        super().__init__(f"Cover relation contains a cycle: {' < '.join(self.cycle)}")


class NoBottom(PosetkitError):
    """Raised when a poset has no least element."""
    pass


class NoTop(PosetkitError):
    """Raised when a poset has no greatest element."""
    pass


class Trivial(PosetkitError):
    """Raised when the least and greatest element coincide."""
    pass


class ForeignSubset(PosetkitError):
    """Raised when a subset is used with a poset that does not own it."""
    pass


class EmptyComplementSet(PosetkitError):
    """Raised when an element has no complement."""
    pass


class SizeCapExceeded(PosetkitError):
    """Raised when an exponential operation is requested above its size cap."""

    def __init__(self, operation: str, size: int, cap: int):
        self.operation = operation
        self.size = size
        self.cap = cap
        super().__init__(f"{operation}: size {size} exceeds cap {cap}")

    def __reduce__(self):
        return SizeCapExceeded, (self.operation, self.size, self.cap)


class PredicateUnknown(PosetkitError):
    """Raised when a search predicate names no registered property."""
    pass


class UnknownProperty(PosetkitError):
    """Raised when a check requests an unregistered property."""
    pass


class PosetSyntaxError(PosetkitError):
    """Raised when a poset file does not follow the file grammar."""

    def __init__(self, message: str, line: int, column: int = 1, path: Optional[str] = None):
        self.line = line
        self.column = column
        self.path = path
        where = f"{path}:" if path else ''
        super().__init__(f"{where}{line}:{column}: {message}")


class ManifestError(PosetkitError):
    """Raised when the fixture manifest is missing or invalid."""
    pass

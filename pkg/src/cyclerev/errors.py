"""Exception types raised across the package."""


class CycleRevError(ValueError):
    """Base class for all errors raised by cyclerev."""


class InvalidArcError(CycleRevError):
    """An arc violates the oriented-graph rules (loop, duplicate, anti-parallel, range)."""

    def __init__(self, message, arc):
        super().__init__(f"{message}: {tuple(arc)}")
        self.arc = tuple(arc)


class InvalidCycleError(CycleRevError):
    """A vertex sequence is not a simple directed cycle of the host digraph."""


class InvalidStepError(CycleRevError):
    """Step ``index`` of a reversal sequence is not a cycle of the intermediate digraph."""

    def __init__(self, index, reason):
        super().__init__(f"step {index}: {reason}")
        self.index = index
        self.reason = reason


class CapExceededError(CycleRevError):
    """Cycle enumeration produced more cycles than the caller allowed."""


class NotATournamentError(CycleRevError):
    pass


class CyclicSetError(CycleRevError):
    """A vertex set that must induce an acyclic subdigraph does not."""


class ScoreMismatchError(CycleRevError):
    def __init__(self, vertex, left, right):
        super().__init__(f"out-degree of vertex {vertex} differs: {left} != {right}")
        self.vertex = vertex


class WidgetError(CycleRevError):
    """Precondition failure in a widget; ``index`` names the offending path or arc."""

    def __init__(self, message, index=None):
        super().__init__(message if index is None else f"[{index}] {message}")
        self.index = index


class InfeasibleArcError(WidgetError):
    pass

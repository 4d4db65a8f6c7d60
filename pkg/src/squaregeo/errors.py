"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed primitive input (bad vertex id, self loop, not a permutation)."""


class StructuralError(ValueError):
    """Input violates a structural requirement (missing clique edge, bad realization)."""


class ScopeError(ValueError):
    """Input is outside the scope a routine is specified for."""


class OrderConstructionError(RuntimeError):
    """The order-construction rules produced a constraint cycle.

    Carries the offending cycle as a tuple of vertices."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("constraint cycle: " + " -> ".join(map(str, self.cycle)))


class GenerationError(RuntimeError):
    """Random instance generation exhausted its attempt budget."""


class ParseError(ValueError):
    """Text input could not be parsed; message includes the line number."""

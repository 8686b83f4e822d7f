"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph input: disconnected, out-of-range vertex, bad encoding."""


class StateSpaceCapError(RuntimeError):
    """A solve would exceed the configured state-space or move budget.

    Carries the size that would have been required so callers can report it.
    """

    def __init__(self, message: str, required: int, cap: int):
        super().__init__(message)
        self.required = required
        self.cap = cap


class IllegalMoveError(RuntimeError):
    """A strategy script emitted a move outside the closed neighborhood."""

    def __init__(self, message: str, round_index: int, offender: str):
        super().__init__(message)
        self.round_index = round_index
        self.offender = offender

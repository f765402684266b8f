"""Failure classes raised by the solvers."""


class StepSizeError(RuntimeError):
    """A displacement step was large enough to risk a non-invertible update."""


class FoldedWarpError(RuntimeError):
    """The tracked inverse Jacobian lost positivity; the warp has folded.

    The offending solver state, when available, is attached as ``state``.
    """

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state

"""Exception hierarchy shared by every stage of the pipeline."""


class KDiracError(Exception):
    """Base class for all errors raised by :mod:`kdirac`."""


class InvalidParameterError(KDiracError, ValueError):
    """A rank, index or other argument is outside its admissible range."""


class UnsupportedRankError(InvalidParameterError):
    """The number of variables is below the smallest supported rank."""


class DominanceError(KDiracError, ValueError):
    """A weight fails a dominance condition required by an operation.

    ``violations`` lists the failed inequalities in readable form.
    """

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


class StructuralError(KDiracError, RuntimeError):
    """An internal cross-check of the constructed diagrams failed."""

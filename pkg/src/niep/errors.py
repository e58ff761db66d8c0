"""Exception types shared across the package."""


class NiepError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(NiepError, ValueError):
    """An eigenvalue list was empty."""


class UnpairedConjugate(NiepError, ValueError):
    """A non-real value has no conjugate partner: the list cannot be the
    spectrum of a real matrix."""

    def __init__(self, value, message=None):
        self.value = value
        super().__init__(message or f"no conjugate partner for {value!r}")


class WrongDimension(NiepError, ValueError):
    """A decider received a spectrum of the wrong size."""


class DimensionMismatch(NiepError, ValueError):
    """Two inputs that must agree in size do not."""


class InvalidParameter(NiepError, ValueError):
    """A structural parameter is out of its allowed range."""


class NotBipartite(NiepError, ValueError):
    """The graph contains an odd cycle.

    The offending cycle is stored on ``odd_cycle`` as a vertex list.
    """

    def __init__(self, odd_cycle):
        self.odd_cycle = list(odd_cycle)
        super().__init__(f"graph is not bipartite, odd cycle {self.odd_cycle}")


class ConstructionError(NiepError, RuntimeError):
    """A realizing-matrix construction could not be carried out.

    This signals failure of the construction, not non-realizability of the
    target spectrum.
    """


class NotCompanionNonnegative(ConstructionError):
    """Some characteristic-polynomial coefficient is positive, so the
    companion matrix has a negative entry."""


class OutsidePi3(ConstructionError):
    """The requested complex pair lies outside the scaled triangle of cube
    roots of unity, so no 3-by-3 circulant realization exists."""


class NotSuleimanova(ConstructionError):
    """The input is not a Suleimanova spectrum (one dominant nonnegative
    value, all other values nonpositive, nonnegative total with the
    negatives)."""

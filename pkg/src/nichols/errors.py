"""Exception types shared across the package."""

from __future__ import annotations


class NicholsError(Exception):
    """Base class for all errors raised by this package."""


class ContextMismatch(NicholsError, ValueError):
    """Two scalars from different scalar contexts were combined."""


class ParseError(NicholsError, ValueError):
    """Malformed braiding file or monomial text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotReflectable(NicholsError):
    """Reflection at ``i`` is undefined because ``m_ij`` does not exist."""

    def __init__(self, i: int, j: int):
        self.i = i
        self.j = j
        super().__init__(
            f"cannot reflect at index {i + 1}: m_{{{i + 1},{j + 1}}} is undefined"
        )


class CapExceeded(NicholsError):
    """A breadth-first search hit one of its size caps.

    ``partial`` carries whatever had been built when the cap was hit.
    """

    def __init__(self, message: str, partial=None):
        self.partial = partial
        super().__init__(message)


class MixedSignRoot(NicholsError):
    """A basis vector with both positive and negative coordinates appeared."""

    def __init__(self, vector):
        self.vector = tuple(vector)
        super().__init__(f"root {self.vector} is neither positive nor negative")


class NotFiniteType(NicholsError, ValueError):
    """Operation requires a Cartan matrix of finite type."""


class NotA3Cycle(NicholsError, ValueError):
    """The trace formula needs a 3x3 matrix with all off-diagonal entries < 0."""


class NotInvertible(NicholsError, ValueError):
    """Integer matrix is not invertible over the integers."""


class NegativeDiscrepancy(NicholsError):
    """Hilbert table cannot be factored at the given degree cutoff."""

    def __init__(self, degree, discrepancy: int):
        self.degree = tuple(degree)
        self.discrepancy = discrepancy
        super().__init__(
            f"negative discrepancy {discrepancy} at degree {self.degree}; "
            "raise the maximal degree"
        )


class AmbiguousFactorization(NicholsError):
    """More than one PBW factorization fits the Hilbert table up to the cutoff."""

    def __init__(self, degree, candidates):
        self.degree = tuple(degree)
        self.candidates = list(candidates)
        super().__init__(
            f"ambiguous height assignment at degree {self.degree}: "
            f"candidates {self.candidates}"
        )

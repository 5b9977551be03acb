"""Exception types raised by the reconstruction pipeline."""


class TomographyError(Exception):
    """Base class for all qtomo errors."""


class NotHermitian(TomographyError, ValueError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class DimensionMismatch(TomographyError, ValueError):
    """Operands have incompatible or non-qubit dimensions."""


class NotNormalized(TomographyError, ValueError):
    """Trace deviates from 1 beyond tolerance."""


class NotPhysicalState(TomographyError, ValueError):
    """State fails Hermiticity, normalization, or positivity checks."""


class MissingIdentityCoefficient(TomographyError, ValueError):
    """Pauli coefficient map lacks the all-identity entry."""


class IncompleteSet(TomographyError, ValueError):
    """Expectation set is missing required Pauli strings."""

    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__(f"expectation set incomplete, missing: {', '.join(self.missing)}")


class ZeroParameters(TomographyError, ValueError):
    """Parameter vector gives a factor with vanishing trace."""


class SingularPivot(TomographyError, ValueError):
    """Triangular factorization hit a vanishing pivot even after regularization."""


class ZeroSigma(TomographyError, ValueError):
    """A measurement record carries a non-positive standard deviation."""


class ZeroNorm(TomographyError, ValueError):
    """Fidelity denominator underflows (matrix has vanishing Frobenius norm)."""


class UnsupportedDimension(TomographyError, ValueError):
    """Operation is only defined for a specific qubit count."""


class UnknownState(TomographyError, ValueError):
    """Named target state is not in the registry."""

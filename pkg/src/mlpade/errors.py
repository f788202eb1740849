"""Exception taxonomy for the mlpade package.

Every numerical failure mode gets its own class so that callers (and the
service layer) can map problems to exit codes / HTTP statuses without
string matching.
"""


class MlpadeError(Exception):
    """Base class for all package errors."""


class InvalidSpec(MlpadeError):
    """Approximant parameters outside the admissible set."""


class IllConditioned(MlpadeError):
    """Coefficient system close to singular; carries the condition estimate."""

    def __init__(self, message, rcond):
        super().__init__(message)
        self.rcond = rcond


class GammaOverflow(MlpadeError):
    """Gamma argument beyond the double-precision overflow threshold."""


class NumeratorPole(MlpadeError):
    """Gamma ratio requested with a pole in the numerator."""


class NonConvergence(MlpadeError):
    """Iterative root finder missed its residual target."""


class SingularMatrix(MlpadeError):
    """Pivot collapsed during LU factorization."""


class RepeatedPoles(MlpadeError):
    """Denominator roots too close for a simple-pole decomposition."""


class RealPositivePole(MlpadeError):
    """A denominator root lies on [0, inf); the approximant is unusable there."""


class UnpairedPoles(MlpadeError):
    """Conjugate pairing of the poles failed; raw pole list attached."""

    def __init__(self, message, poles):
        super().__init__(message)
        self.poles = poles


class PairingUnavailable(MlpadeError):
    """Matrix evaluation requested but the decomposition is unpaired."""


class InverseDomainError(MlpadeError):
    """Inverse queried outside (0, 1/Gamma(beta)]."""


class NegativeDiscriminant(MlpadeError):
    """Closed-form quadratic inversion produced a negative radicand."""

    def __init__(self, message, radicand):
        super().__init__(message)
        self.radicand = radicand


class NoPositiveRoot(MlpadeError):
    """Inversion quartic has no positive real root; all roots attached."""

    def __init__(self, message, roots):
        super().__init__(message)
        self.roots = roots


class MultiplePositiveRoots(MlpadeError):
    """Inversion quartic has several positive real roots; all roots attached."""

    def __init__(self, message, roots):
        super().__init__(message)
        self.roots = roots


class PrecisionLoss(MlpadeError):
    """Series summation lost too many digits to cancellation."""


class ContourFailure(MlpadeError):
    """Contour quadrature failed its doubled-node self check."""

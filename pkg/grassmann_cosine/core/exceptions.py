"""
Custom exceptions for the Grassmann cosine transform library
"""


class GrassmannCosineException(Exception):
    """Base exception for the library"""
    pass


class SpecMismatch(GrassmannCosineException):
    """Two objects belong to different Grassmannians"""
    pass


class DomainError(GrassmannCosineException, ValueError):
    """Argument outside the domain where an operation is defined"""
    pass


class ConvergenceError(GrassmannCosineException):
    """Quadrature refinement or extrapolation did not reach its tolerance"""

    def __init__(self, message: str, estimate: float = float("nan"), error: float = float("nan")):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class IllConditioned(GrassmannCosineException):
    """A Gram matrix is too ill-conditioned to orthogonalize reliably"""
    pass


class ProfileParseError(GrassmannCosineException, ValueError):
    """Profile expression could not be parsed"""
    pass


class ConfigurationException(GrassmannCosineException):
    """Exception for configuration errors"""
    pass

class QuiverError(Exception):
    """Base class for errors raised by this package."""


class ParseError(QuiverError, ValueError):
    pass


class CapExceeded(QuiverError):
    """An input is larger than the configured size or cost cap."""


class GradingMismatch(QuiverError, ValueError):
    """Two orbits with different dimension vectors were compared."""


class ConsistencyError(QuiverError):
    """Two computations that must agree did not; this signals a bug."""


class HeldOutMismatch(ConsistencyError):
    pass


class DeconvolutionError(ConsistencyError):
    def __init__(self, lam, mu, message):
        self.lam, self.mu = lam, mu
        super().__init__(f"pair ({lam} ; {mu}): {message}")

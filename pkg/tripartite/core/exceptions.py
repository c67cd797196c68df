# core/exceptions.py


class TripartiteError(Exception):
    """Base exception for tripartite-estimation errors"""

    code = "error"


class DomainError(TripartiteError, ValueError):
    """Raised when an input lies outside the domain of a formula"""

    code = "domain"


class PhaseError(TripartiteError):
    """Raised when a normal-phase quantity is requested beyond the critical point"""

    code = "phase"


class StabilityError(TripartiteError):
    """Raised when the drift matrix has an eigenvalue with non-negative real part"""

    code = "unstable"


class TruncationError(TripartiteError):
    """Raised when a truncated Fock basis leaks more than the allowed tail mass"""

    code = "truncation"


class StepError(TripartiteError):
    """Raised when finite-difference estimates with different stencils disagree"""

    code = "step"


class OrderError(TripartiteError):
    """Raised when a moment exceeds the engine's maximum order"""

    code = "order"


class ArityError(TripartiteError):
    """Raised when a decoupling relation is requested for an unsupported arity"""

    code = "arity"


class ConvergenceError(TripartiteError):
    """Raised when an extrapolation ladder does not settle"""

    code = "convergence"


class ConfigError(TripartiteError):
    """Raised for invalid sweep configuration, with field diagnostics"""

    code = "config"

    def __init__(self, message, errors=None):
        super().__init__(message)
        self.errors = errors or {}

    def __str__(self):
        message = super().__str__()
        if not self.errors:
            return message
        details = "; ".join(
            f"{field}: {', '.join(str(e) for e in msgs)}"
            for field, msgs in self.errors.items()
        )
        return f"{message} ({details})"

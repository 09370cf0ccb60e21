"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation accepts."""


class NotHermitianError(DomainError):
    """A matrix expected to be Hermitian is not, beyond tolerance."""

    def __init__(self, asymmetry, tol):
        self.asymmetry = asymmetry
        self.tol = tol
        super().__init__(
            f"matrix is not Hermitian: max|M - M^H| = {asymmetry:.3e} exceeds {tol:.3e}"
        )


class ConvergenceError(RuntimeError):
    """An iterative routine failed to converge."""

    def __init__(self, message, iterations):
        self.iterations = iterations
        super().__init__(f"{message} (after {iterations} iterations)")


class ConfigurationError(ValueError):
    """Optimizer or VQE options are inconsistent."""


class NonFiniteObjectiveError(FloatingPointError):
    """The objective returned nan or inf; carries the offending parameters."""

    def __init__(self, value, params):
        self.value = value
        self.params = params
        super().__init__(f"objective returned {value!r} at parameters {list(params)!r}")


class FileFormatError(ValueError):
    """A matrix or Pauli-sum file is malformed."""

    def __init__(self, path, line, message):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {message}")

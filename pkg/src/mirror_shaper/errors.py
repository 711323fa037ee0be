class ConfigurationError(ValueError):
    """Raised when a config object or config file fails validation."""


class DivergenceError(RuntimeError):
    """Raised when learner weights stop being finite.

    The trial loop catches this, marks the trial record as diverged and
    preserves whatever per-step log exists up to the failing step.
    """

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step

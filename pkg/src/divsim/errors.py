"""Exception taxonomy, aligned with the CLI exit codes."""


class DivsimError(Exception):
    """Base class for all package-specific failures."""


class ConfigError(DivsimError):
    """Invalid or inconsistent run configuration (exit code 2)."""


class DataError(DivsimError):
    """Invalid dataset content, schema mismatch, or bad split (exit code 3)."""


class NumericalError(DivsimError):
    """Optimizer or linear-solver failure (exit code 4)."""

"""Exception types shared across the package."""


class CritPathError(Exception):
    """Base class for all errors raised by this package."""


class TraceError(CritPathError):
    """Malformed or inconsistent trace input.

    ``line`` is the 1-based line number in the source stream when known.
    """

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        prefix = ""
        if line is not None:
            prefix += f"line {line}: "
        if field is not None:
            prefix += f"field '{field}': "
        super().__init__(prefix + message)


class ConfigError(CritPathError):
    """Invalid machine/cost/cache/branch configuration."""


class GraphError(CritPathError):
    """Violation of a graph construction or analysis contract."""


class ScenarioError(CritPathError):
    """Invalid what-if scenario or lane plan."""

"""Exception hierarchy shared by all modules."""


class PathTuranError(Exception):
    """Base class for all errors raised by the package."""


class InvalidModeError(PathTuranError, ValueError):
    """Arithmetic mode incompatible with the requested exponent."""


class CapacityError(PathTuranError, ValueError):
    """A graph or component exceeds a hard size limit."""


class DomainError(PathTuranError, ValueError):
    """Arguments fall outside an operation's precondition."""


class ConfigurationError(PathTuranError, ValueError):
    """A search or grid configuration is inconsistent."""


class Graph6Error(PathTuranError, ValueError):
    """Malformed graph6 input.

    ``position`` is the 0-based index of the first offending byte.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (byte {position})")
        self.position = position

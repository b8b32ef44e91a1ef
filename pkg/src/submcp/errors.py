"""Exception hierarchy shared by all modules."""


class SubMCPError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class InvalidSubsetError(SubMCPError, ValueError):
    pass


class InvalidPartitionError(SubMCPError, ValueError):
    pass


class InvalidArgumentError(SubMCPError, ValueError):
    pass


class ValidationError(SubMCPError, ValueError):
    """Malformed instance data. ``field`` names the offending location."""

    def __init__(self, message, field=None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class InfeasibleError(SubMCPError):
    pass


class PropertyViolationError(SubMCPError):
    pass


class ResourceLimitError(SubMCPError):
    pass


class InternalInvariantError(SubMCPError):
    exit_code = 2

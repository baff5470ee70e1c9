class PhotonFusionError(Exception):
    """Base class for every error raised by this package."""


class UsageError(PhotonFusionError, ValueError):
    """An argument is outside the range an operation accepts."""


class DomainError(PhotonFusionError, ValueError):
    """An approximation was evaluated where it is undefined."""


class ConfigError(PhotonFusionError, ValueError):
    """A settings or run-config file is malformed. Always names the field."""

    def __init__(self, field: str, message: str) -> None:
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}")

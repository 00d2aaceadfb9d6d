class ConfigError(Exception):
    """Raised when the settings are invalid."""

    pass

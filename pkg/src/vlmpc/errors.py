"""Exception types shared across the toolkit."""


class VlmpcError(Exception):
    """Base class for all toolkit errors."""


class InvalidInputError(VlmpcError, ValueError):
    """An operation received arguments that violate its contract."""


class ConfigError(VlmpcError, ValueError):
    """A scene/run configuration is malformed; the message names the field."""


class UnknownEntityError(InvalidInputError):
    """An entity id could not be resolved in a frame or observation."""


class PerceptionTransportError(VlmpcError, RuntimeError):
    """Remote perceiver call failed; recoverable, callers should fall back."""

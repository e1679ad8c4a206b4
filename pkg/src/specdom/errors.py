"""Error taxonomy shared by every module.

Three failure classes map onto the CLI exit codes: bad arguments (2),
domain violations such as disconnected input where connectivity is required
(3), and exceeded resource limits (4).
"""


class SpecdomError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class InvalidArgumentError(SpecdomError):
    """Malformed or out-of-contract arguments (CLI exit code 2)."""

    exit_code = 2


class DomainError(SpecdomError):
    """Structurally valid input outside an operation's domain (exit code 3)."""

    exit_code = 3


class ResourceLimitError(SpecdomError):
    """Configured size/enumeration limit exceeded (exit code 4)."""

    exit_code = 4

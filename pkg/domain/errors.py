from corelib.constants import ExitCode


class AvalancheError(Exception):
    exit_code: ExitCode = ExitCode.USAGE


class DomainError(AvalancheError, ValueError):
    """Input outside the domain of the requested operation."""

    exit_code = ExitCode.USAGE


class DegenerateInputError(DomainError):
    pass


class ResourceError(AvalancheError):
    """An enumeration would exceed its configured cap."""

    exit_code = ExitCode.RESOURCE


def check_cap(value: int, cap: int, what: str) -> None:
    if value > cap:
        raise ResourceError(f'{what}: {value} exceeds the configured cap of {cap}')


__all__ = [
    'AvalancheError',
    'DomainError',
    'DegenerateInputError',
    'ResourceError',
    'check_cap',
]

from dataclasses import dataclass, field
from typing import Any, Sequence

from corelib.constants import ExitCode


@dataclass(frozen=True)
class CommandResult:
    """What a handler hands back to the writer.

    ``payload`` is the JSON document, ``header``/``rows`` its tabular CSV
    rendering. A failed check is a normal result with ``passed=False``.
    """

    command: str
    payload: dict[str, Any]
    header: Sequence[str] = ()
    rows: Sequence[Sequence[Any]] = field(default_factory=tuple)
    passed: bool = True

    @property
    def exit_code(self) -> ExitCode:
        return ExitCode.OK if self.passed else ExitCode.CHECK_FAILED


__all__ = ['CommandResult']

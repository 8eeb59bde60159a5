import abc
from typing import Optional

from avalanches.app.artifacts import CommandResult
from domain.value_objects import OutputFormat


class IArtifactWriter(metaclass=abc.ABCMeta):
    @abc.abstractmethod
    def write(
        self,
        result: CommandResult,
        fmt: OutputFormat,
        output: str = '-',
        output_dir: Optional[str] = None,
    ) -> str:
        """Persist the result and return where it went ('-' for stdout)."""
        raise NotImplementedError

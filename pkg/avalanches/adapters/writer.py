import csv
import io
import logging
import posixpath
import sys
from typing import Optional, TextIO

import orjson

from avalanches.app.artifacts import CommandResult
from avalanches.ports.writer import IArtifactWriter
from domain.value_objects import OutputFormat
from fileslib.fs_factory import DefaultFSFactory
from fileslib.registry import Registry

logger = logging.getLogger(__name__)

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE | orjson.OPT_SERIALIZE_NUMPY
STDOUT = '-'


def render(result: CommandResult, fmt: OutputFormat) -> bytes:
    if OutputFormat(fmt) == OutputFormat.JSON:
        return orjson.dumps(result.payload, option=JSON_OPTIONS)
    buff = io.StringIO()
    writer = csv.writer(buff, lineterminator='\n')
    writer.writerow(result.header)
    writer.writerows(result.rows)
    return buff.getvalue().encode('utf-8')


class FsArtifactWriter(IArtifactWriter):
    """Writes rendered results through an fsspec filesystem, or to stdout."""

    def __init__(
        self,
        fs_factory: DefaultFSFactory,
        default_output_dir: Optional[str] = None,
        stdout: Optional[TextIO] = None,
    ):
        self._fs_factory = fs_factory
        self._default_output_dir = default_output_dir
        self._stdout = stdout

    def resolve(self, output: str, output_dir: Optional[str] = None) -> str:
        base = output_dir or self._default_output_dir
        if base and not posixpath.isabs(output):
            return posixpath.join(base, output)
        return output

    def write(
        self,
        result: CommandResult,
        fmt: OutputFormat,
        output: str = STDOUT,
        output_dir: Optional[str] = None,
    ) -> str:
        data = render(result, fmt)
        if output == STDOUT:
            stream = self._stdout or sys.stdout
            stream.write(data.decode('utf-8'))
            stream.flush()
            return STDOUT
        location = self.resolve(output, output_dir)
        with Registry(bind=self._fs_factory.create()) as registry:
            registry.add(location, data)
        logger.info('%s result written to %s', result.command, location)
        return location


__all__ = ['FsArtifactWriter', 'render']

import logging
import sys
from typing import Optional, Sequence

from dishka import Container
from pydantic import ValidationError

from avalanches.app.messagebus import MessageBus
from avalanches.bootstrap import bootstrap_sync
from avalanches.drivers.cli import build_command, build_parser
from avalanches.ports.writer import IArtifactWriter
from corelib.config import Settings, get_settings
from corelib.constants import ExitCode
from corelib.logger import configure_logging
from domain.errors import AvalancheError

logger = logging.getLogger(__name__)


def main(
    argv: Optional[Sequence[str]] = None,
    container: Optional[Container] = None,
    settings: Optional[Settings] = None,
) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; --help exits with 0
        return int(exc.code or 0)

    try:
        settings = settings or get_settings()
    except ValidationError as exc:
        print(f'invalid environment configuration: {exc}', file=sys.stderr)
        return int(ExitCode.USAGE)
    configure_logging(settings, verbose=args.verbose)

    owns_container = container is None
    container = container or bootstrap_sync(settings)
    try:
        command = build_command(args)
        logger.info('dispatching %s', command.type)
        result = container.get(MessageBus).handle(container, command)
        container.get(IArtifactWriter).write(
            result, args.format, output=args.output, output_dir=args.output_dir
        )
        return int(result.exit_code)
    except ValidationError as exc:
        logger.error('invalid arguments for %s: %s', args.command, exc)
        return int(ExitCode.USAGE)
    except AvalancheError as exc:
        logger.error('%s: %s', args.command, exc)
        return int(exc.exit_code)
    finally:
        if owns_container:
            container.close()


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()

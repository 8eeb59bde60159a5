import logging
from inspect import Parameter
from typing import Callable, Dict, Type

from dishka import Container, Scope
from dishka.integrations.base import wrap_injection

from avalanches.app.artifacts import CommandResult
from domain import Message
from domain.commands.base import CommandBase
from domain.errors import AvalancheError

logger = logging.getLogger(__name__)


class MessageBus:
    """Dispatches a command to its handler inside a request scope."""

    def __init__(self, command_handlers: Dict[Type[CommandBase], Callable]):
        self.command_handlers: Dict[Type[CommandBase], Callable] = dict()
        for key in command_handlers.keys():
            self.command_handlers[key] = wrap_injection(  # type: ignore
                func=command_handlers[key],
                is_async=False,
                container_getter=lambda _, kwargs: kwargs['container'],
                additional_params=[
                    Parameter(
                        name='container',
                        annotation=Container,
                        kind=Parameter.KEYWORD_ONLY,
                    )
                ],
            )

    def handle(self, container: Container, message: Message) -> CommandResult:
        if not isinstance(message, CommandBase):
            raise TypeError(f'{message} was not a Command')
        return self.handle_command(container, message)

    def handle_command(self, container: Container, command: CommandBase) -> CommandResult:
        logger.debug('handling command %s', command)
        try:
            handler = self.command_handlers.get(type(command), None)
            if not handler:
                raise NotImplementedError(f'Could not find a handler for {command}')
            with container(scope=Scope.REQUEST) as request_container:
                result = handler(command, container=request_container)
            logger.info('%s finished, passed=%s', command.type, result.passed)
            return result
        except AvalancheError as exc:
            logger.warning('%s rejected: %s', command.type, exc)
            raise
        except Exception:
            logger.exception('Exception handling command %s', command.type)
            raise


__all__ = ['MessageBus']

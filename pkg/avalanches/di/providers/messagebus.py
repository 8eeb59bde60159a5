from dishka import Provider, Scope, provide

from avalanches.app.handlers import COMMAND_HANDLERS
from avalanches.app.messagebus import MessageBus


class MessageBusProvider(Provider):
    @provide(scope=Scope.APP)
    def get_message_bus(self) -> MessageBus:
        return MessageBus(command_handlers=COMMAND_HANDLERS)


__all__ = ['MessageBusProvider']

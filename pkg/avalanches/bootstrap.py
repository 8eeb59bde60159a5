import warnings
from typing import Optional

from dishka import Container, Provider, make_container

from avalanches.di.providers.factory import FactoryProvider
from avalanches.di.providers.messagebus import MessageBusProvider
from avalanches.di.providers.runner import RunnerProvider
from avalanches.di.providers.settings import SettingsProvider
from avalanches.di.providers.writer import WriterProvider
from corelib.config import Settings


def bootstrap_sync(
    settings: Optional[Settings] = None, *overrides: Provider
) -> Container:
    """Build the application container; later providers override earlier ones."""
    warnings.filterwarnings('ignore', category=DeprecationWarning)
    return make_container(
        SettingsProvider(settings),
        FactoryProvider(),
        RunnerProvider(),
        WriterProvider(),
        MessageBusProvider(),
        *overrides,
    )


__all__ = ['bootstrap_sync']

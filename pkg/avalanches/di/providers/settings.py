from typing import Optional

from dishka import Provider, Scope, provide

from corelib.config import Settings, get_settings


class SettingsProvider(Provider):
    def __init__(self, settings: Optional[Settings] = None):
        super().__init__()
        self._settings = settings

    @provide(scope=Scope.APP)
    def get_settings(self) -> Settings:
        return self._settings or get_settings()


__all__ = ['SettingsProvider']

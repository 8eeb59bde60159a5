from dishka import Provider, Scope, provide

from fileslib.fs_factory import DefaultFSFactory, LocalDiskFSConfigs


class FactoryProvider(Provider):
    @provide(scope=Scope.APP)
    def get_default_fs_factory(self) -> DefaultFSFactory:
        return DefaultFSFactory(configs=LocalDiskFSConfigs())


__all__ = [
    'FactoryProvider',
]

from dishka import Provider, Scope, provide

from avalanches.adapters.runners import LocalShardRunner, ProcessShardRunner
from avalanches.ports.runner import IShardRunner
from corelib.config import Settings
from corelib.constants import ShardRunnerKind


class RunnerProvider(Provider):
    @provide(scope=Scope.APP)
    def get_shard_runner(self, settings: Settings) -> IShardRunner:
        if settings.SHARD_RUNNER == ShardRunnerKind.process:
            return ProcessShardRunner(max_workers=settings.SHARD_WORKERS)
        return LocalShardRunner()


__all__ = ['RunnerProvider']

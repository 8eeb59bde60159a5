from dishka import Provider, Scope, provide

from avalanches.adapters.writer import FsArtifactWriter
from avalanches.ports.writer import IArtifactWriter
from corelib.config import Settings
from fileslib.fs_factory import DefaultFSFactory


class WriterProvider(Provider):
    @provide(scope=Scope.APP)
    def get_artifact_writer(
        self, settings: Settings, fs_factory: DefaultFSFactory
    ) -> IArtifactWriter:
        return FsArtifactWriter(
            fs_factory=fs_factory,
            default_output_dir=settings.AVALANCHE_OUTPUT_DIR,
        )


__all__ = ['WriterProvider']

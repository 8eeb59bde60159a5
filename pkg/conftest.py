import pytest

from avalanches.adapters.runners import LocalShardRunner
from avalanches.app.messagebus import MessageBus
from avalanches.bootstrap import bootstrap_sync
from corelib.config import Settings


@pytest.fixture
def settings() -> Settings:
    # small chunks so the chunked sampling path runs in every simulation test
    return Settings(
        APP_ENV='DEV',
        AVALANCHE_OUTPUT_DIR=None,
        SIMULATION_CHUNK_SIZE=4096,
        SHARD_RUNNER='local',
    )


@pytest.fixture
def container(settings):
    container = bootstrap_sync(settings)
    yield container
    container.close()


@pytest.fixture
def bus(container) -> MessageBus:
    return container.get(MessageBus)


@pytest.fixture
def runner() -> LocalShardRunner:
    return LocalShardRunner()


@pytest.fixture
def output_dir(tmp_path):
    path = tmp_path / 'artifacts'
    path.mkdir()
    return path

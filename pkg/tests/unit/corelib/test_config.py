import pytest
from pydantic import ValidationError

from corelib.config import Settings
from corelib.constants import Environments, ExitCode, ShardRunnerKind
from corelib.logger import DEFAULT_LOGGING_CONFIG, load_logging_config


def test_defaults():
    settings = Settings(APP_ENV='dev')
    assert settings.APP_ENV == Environments.dev
    assert settings.DEBUG
    assert settings.TREE_CENSUS_MAX_VERTICES == 8
    assert settings.URN_ENUMERATION_CAP == settings.TOWER_ENUMERATION_CAP == 10**7
    assert settings.SHARD_RUNNER == ShardRunnerKind.local
    assert settings.MIN_EXPECTED_COUNT == 5.0


def test_unknown_environment_is_production():
    settings = Settings(APP_ENV='staging-ish')
    assert settings.APP_ENV == Environments.prod
    assert not settings.DEBUG


def test_environment_variables(monkeypatch, tmp_path):
    monkeypatch.setenv('URN_ENUMERATION_CAP', '1000')
    monkeypatch.setenv('SHARD_RUNNER', 'process')
    monkeypatch.setenv('AVALANCHE_OUTPUT_DIR', str(tmp_path))
    settings = Settings()
    assert settings.URN_ENUMERATION_CAP == 1000
    assert settings.SHARD_RUNNER == ShardRunnerKind.process
    assert settings.AVALANCHE_OUTPUT_DIR == str(tmp_path)


def test_invalid_values(monkeypatch):
    monkeypatch.setenv('SIMULATION_CHUNK_SIZE', '0')
    with pytest.raises(ValidationError):
        Settings()


def test_exit_codes():
    assert [int(code) for code in ExitCode] == [0, 1, 2, 3]


def test_shipped_logging_config():
    config = load_logging_config(DEFAULT_LOGGING_CONFIG)
    assert config['handlers']['default']['stream'] == 'ext://sys.stderr'
    assert 'avalanches' in config['loggers']
    assert load_logging_config('/nonexistent/logging.json') is None

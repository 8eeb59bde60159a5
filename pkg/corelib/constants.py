from enum import Enum

RATIONAL_REGEX = r'^\s*(?P<num>[-+]?\d+)\s*(?:/\s*(?P<den>[-+]?\d+)\s*)?$'


class Environments(str, Enum):
    dev = 'DEV'
    stage = 'STAGE'
    prod = 'PROD'

    def __repr__(self):
        return self.value


class ExitCode(int, Enum):
    OK = 0
    CHECK_FAILED = 1
    USAGE = 2
    RESOURCE = 3


class ShardRunnerKind(str, Enum):
    local = 'local'
    process = 'process'

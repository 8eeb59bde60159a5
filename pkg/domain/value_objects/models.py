from enum import Enum


class PmfModel(str, Enum):
    AVALANCHE = 'avalanche'
    ABELIAN = 'abelian'
    CONDITIONAL = 'conditional'
    LIMIT = 'limit'


class SimModel(str, Enum):
    URN = 'urn'
    TOWER = 'tower'


class CompareModel(str, Enum):
    URN = 'urn'
    TOWER = 'tower'
    GENERAL = 'general'


class PartitionMethod(str, Enum):
    GROUPED = 'grouped'
    EXHAUSTIVE = 'exhaustive'


class OutputFormat(str, Enum):
    JSON = 'json'
    CSV = 'csv'

from .models import CompareModel, OutputFormat, PartitionMethod, PmfModel, SimModel
from .params import DOMAIN_CONSTRAINT, AvalancheParams, LimitParams, UrnConfig

__all__ = [
    'AvalancheParams',
    'LimitParams',
    'UrnConfig',
    'DOMAIN_CONSTRAINT',
    'PmfModel',
    'SimModel',
    'CompareModel',
    'PartitionMethod',
    'OutputFormat',
]

import abc
from typing import Literal

from fsspec import AbstractFileSystem
from fsspec.implementations.local import LocalFileSystem
from fsspec.implementations.memory import MemoryFileSystem
from pydantic import BaseModel, model_serializer
from pydantic_core.core_schema import SerializationInfo


class IFSConfigs(BaseModel, metaclass=abc.ABCMeta):
    pass


class LocalDiskFSConfigs(IFSConfigs):
    type: Literal['local-disk-fs-configs'] = 'local-disk-fs-configs'
    auto_mkdir: bool = True

    @model_serializer(when_used='json')
    def serialize_model(self, info: SerializationInfo):
        if isinstance(info.context, dict):
            if info.context.get('to', None) == 'fsspec':
                return {'auto_mkdir': self.auto_mkdir}
        return {
            'type': str(self.type),
            'auto_mkdir': self.auto_mkdir,
        }


class MemoryFSConfigs(IFSConfigs):
    type: Literal['memory-fs-configs'] = 'memory-fs-configs'


class DefaultFSFactory:
    def __init__(self, configs: IFSConfigs):
        self._configs = configs

    @property
    def configs(self) -> IFSConfigs:
        return self._configs

    def create(self) -> AbstractFileSystem:
        if isinstance(self._configs, MemoryFSConfigs):
            return MemoryFileSystem()
        return LocalFileSystem(
            **self._configs.model_dump(mode='json', context={'to': 'fsspec'})
        )


__all__ = [
    'DefaultFSFactory',
    'IFSConfigs',
    'LocalDiskFSConfigs',
    'MemoryFSConfigs',
]

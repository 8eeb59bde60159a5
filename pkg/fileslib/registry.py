import dataclasses
import logging
from typing import Optional

from fsspec import AbstractFileSystem

logger = logging.getLogger(__name__)

PARTIAL_SUFFIX = '.partial'


class Registry:
    """Stages files next to their destination and publishes them on commit.

    Nothing appears under its final name until ``commit``; ``rollback``
    drops every staged file.
    """

    @dataclasses.dataclass
    class Entry:
        location: str
        fs: AbstractFileSystem

        @property
        def staged(self) -> str:
            return f'{self.location}{PARTIAL_SUFFIX}'

    def __init__(self, bind: AbstractFileSystem):
        self._fs = bind
        self._known_files: list[Registry.Entry] = []

    def add(self, location: str, data: bytes, fs: Optional[AbstractFileSystem] = None):
        assert isinstance(data, bytes), 'data must be bytes'
        fs = fs or self._fs
        assert fs, 'fs must exists'
        entry = self.Entry(location=location, fs=fs)
        parent = fs._parent(location)
        if parent:
            fs.makedirs(parent, exist_ok=True)
        with fs.open(entry.staged, 'wb') as dst:
            dst.write(data)
        self._known_files.append(entry)

    @property
    def pending(self) -> list[str]:
        return [entry.location for entry in self._known_files]

    def commit(self) -> list[str]:
        published = []
        for entry in self._known_files:
            entry.fs.mv(entry.staged, entry.location)
            logger.debug('published %s', entry.location)
            published.append(entry.location)
        self._known_files.clear()
        return published

    def rollback(self):
        for entry in self._known_files:
            try:
                entry.fs.rm(entry.staged)
            except FileNotFoundError:
                pass
        self._known_files.clear()

    def __enter__(self) -> 'Registry':
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc_type is None:
            self.commit()
        else:
            self.rollback()


__all__ = ['Registry', 'PARTIAL_SUFFIX']

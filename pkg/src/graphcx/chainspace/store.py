import hashlib
import logging
from collections.abc import Iterable, Iterator
from contextlib import suppress
from typing import TYPE_CHECKING, Optional

from graphcx.errors import BasisStoreError, BasisStorePermissionError

if TYPE_CHECKING:
    from fsspec import AbstractFileSystem

logger = logging.getLogger(__name__)


def slice_oid(**params) -> str:
    """Content address of a basis slice description."""
    text = ";".join(f"{name}={params[name]!r}" for name in sorted(params))
    return hashlib.sha256(text.encode()).hexdigest()


class BasisStore:
    """Content-addressed cache of enumerated basis slices on an fsspec
    filesystem. Each object is the list of compact codes of a slice."""

    def __init__(self, fs: "AbstractFileSystem", path: str, read_only: bool = False):
        self.fs = fs
        self.path = path.rstrip("/")
        self.read_only = read_only
        self._dirs: Optional[set[str]] = None

    def __eq__(self, other: object):
        return isinstance(other, BasisStore) and (
            self.fs.protocol == other.fs.protocol
            and self.path == other.path
            and self.read_only == other.read_only
        )

    def __hash__(self):
        return hash((str(self.fs.protocol), self.path, self.read_only))

    def __repr__(self):
        fs = self.fs
        path = self.path
        read_only = self.read_only
        return f"{self.__class__.__name__}({fs=!r}, {path=!r}, {read_only=!r})"

    def _oid_parts(self, oid: str) -> tuple[str, str]:
        return oid[:2], oid[2:]

    def oid_to_path(self, oid: str) -> str:
        return "/".join((self.path, *self._oid_parts(oid)))

    def path_to_oid(self, path: str) -> str:
        root = self.fs._strip_protocol(self.path).rstrip("/")
        rel = self.fs._strip_protocol(path)[len(root) :].strip("/")
        parts = rel.split("/")
        if not (len(parts) == 2 and len(parts[0]) == 2 and parts[1]):
            raise ValueError(f"Bad cache file path '{path}'")
        return "".join(parts)

    def _init(self, dname: str) -> None:
        if self._dirs is None:
            self._dirs = set()
            with suppress(FileNotFoundError):
                self._dirs = {
                    entry.rstrip("/").rsplit("/", 1)[-1]
                    for entry in self.fs.ls(self.path, detail=False)
                }
        if dname in self._dirs:
            return
        self.fs.makedirs(f"{self.path}/{dname}", exist_ok=True)
        self._dirs.add(dname)

    def exists(self, oid: str) -> bool:
        return self.fs.isfile(self.oid_to_path(oid))

    def get(self, oid: str) -> Optional[list[str]]:
        """Codes stored under `oid`, or None on a miss."""
        try:
            data = self.fs.cat_file(self.oid_to_path(oid))
        except FileNotFoundError:
            logger.debug("basis cache miss %s", oid)
            return None
        logger.debug("basis cache hit %s", oid)
        try:
            text = data.decode()
        except UnicodeDecodeError as exc:
            raise BasisStoreError(f"corrupted basis object {oid}") from exc
        return [line for line in text.splitlines() if line]

    def add(self, oid: str, codes: Iterable[str]) -> None:
        if self.read_only:
            raise BasisStorePermissionError("Cannot add to read-only basis store")
        if self.exists(oid):
            return
        self._init(self._oid_parts(oid)[0])
        payload = "".join(f"{code}\n" for code in codes).encode()
        self.fs.pipe_file(self.oid_to_path(oid), payload)

    def delete(self, oid: str) -> None:
        if self.read_only:
            raise BasisStorePermissionError("Cannot delete from read-only basis store")
        self.fs.rm_file(self.oid_to_path(oid))

    def all(self) -> Iterator[str]:
        with suppress(FileNotFoundError):
            for path in self.fs.find(self.path):
                try:
                    yield self.path_to_oid(path)
                except ValueError:
                    logger.debug("'%s' doesn't look like a cache file, skipping", path)

    def clear(self) -> None:
        for oid in list(self.all()):
            self.delete(oid)

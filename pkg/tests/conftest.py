import pytest
from fsspec.implementations.memory import MemoryFileSystem

from graphcx.chainspace import enumerate_basis
from graphcx.graphcore import OrientedGraph, canonicalize


@pytest.fixture(autouse=True)
def memfs():
    fs = MemoryFileSystem()
    store, pseudo_dirs = dict(fs.store), list(fs.pseudo_dirs)
    fs.store.clear()
    fs.pseudo_dirs[:] = [""]
    yield fs
    fs.store.clear()
    fs.store.update(store)
    fs.pseudo_dirs[:] = pseudo_dirs


@pytest.fixture
def theta():
    return OrientedGraph.from_edges(2, [(0, 1)] * 3)


@pytest.fixture
def theta_class(theta):
    return canonicalize(theta)[0]


@pytest.fixture(scope="session")
def loop3():
    """The connected basis in loop degree 3: (C,) at v=3 and (A, B) at v=4."""
    return enumerate_basis(3, 3).classes, enumerate_basis(4, 3).classes

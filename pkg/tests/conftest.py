import pytest

from pclab.mtable import MTable
from pclab.partitions import partition_count


@pytest.fixture(scope="session")
def exact_p():
    """Exact p(n) for n <= 120000 (covers every identity check used in the tests)."""
    return partition_count(120_000)


@pytest.fixture(scope="session")
def small_p():
    return partition_count(3000)


@pytest.fixture(scope="session")
def mtable():
    return MTable()


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("PCLAB_CACHE", str(tmp_path / "cache"))

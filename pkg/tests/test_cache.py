import json

from pclab.cache import FORMAT_VERSION, TableCache, default_cache_dir
from pclab.mtable import MTable
from pclab.partitions import partition_count


def test_default_dir_from_env(tmp_path, monkeypatch):
    monkeypatch.setenv("PCLAB_CACHE", str(tmp_path / "x"))
    assert default_cache_dir() == tmp_path / "x"


def test_partition_roundtrip_bit_identical(tmp_path):
    c = TableCache(tmp_path)
    t = c.partitions(2000)
    path = c.path("partition", nmax=2000, modulus="exact")
    doc = json.loads(path.read_text())
    assert doc["format_version"] == FORMAT_VERSION
    assert all(isinstance(v, str) for v in doc["values"])
    again = TableCache(tmp_path).partitions(2000)
    assert again.values == t.values == partition_count(2000).values


def test_no_reuse_across_nmax(tmp_path):
    c = TableCache(tmp_path)
    c.partitions(500)
    # poison the small table: a larger request must not be seeded from it
    path = c.path("partition", nmax=500, modulus="exact")
    doc = json.loads(path.read_text())
    doc["values"][400] = "0"
    path.write_text(json.dumps(doc))
    assert c.partitions(900).values == partition_count(900).values
    assert c.partitions(100).values == partition_count(100).values
    assert sorted(p.name for p in tmp_path.glob("partition-*.json")) == [
        "partition-modulusexact-nmax100.json", "partition-modulusexact-nmax500.json",
        "partition-modulusexact-nmax900.json"]


def test_stale_version_is_recomputed(tmp_path):
    c = TableCache(tmp_path)
    c.partitions(50)
    path = c.path("partition", nmax=50, modulus="exact")
    doc = json.loads(path.read_text())
    doc["format_version"] = FORMAT_VERSION + 1
    doc["values"] = ["0"] * 51
    path.write_text(json.dumps(doc))
    assert TableCache(tmp_path).partitions(50).values == partition_count(50).values
    assert json.loads(path.read_text())["format_version"] == FORMAT_VERSION


def test_corrupt_file_ignored(tmp_path):
    c = TableCache(tmp_path)
    path = c.path("twocolor", ell=7, nmax=30, modulus="exact")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("{not json")
    assert c.two_color(7, 30).values[7] == 16


def test_modular_and_twocolor_roundtrip(tmp_path):
    c = TableCache(tmp_path)
    m = c.partitions(300, 7 ** 5)
    m2 = TableCache(tmp_path).partitions(300, 7 ** 5)
    assert [int(v) for v in m.values] == [int(v) for v in m2.values]
    t = c.two_color(49, 300)
    assert TableCache(tmp_path).two_color(49, 300).values == t.values


def test_mtable_roundtrip(tmp_path):
    c = TableCache(tmp_path)
    t = c.mtable(20, 30)
    t2 = TableCache(tmp_path).mtable(20, 30)
    ref = MTable()
    for i in range(1, 21):
        for j in range(1, 31):
            assert t2[i, j] == t[i, j] == ref[i, j]


def test_disabled_cache_writes_nothing(tmp_path):
    c = TableCache(tmp_path / "off", enabled=False)
    c.partitions(100)
    assert not (tmp_path / "off").exists()

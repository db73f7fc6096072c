import json

from pinwheel_lattice import cache
from pinwheel_lattice.enumeration import EnumQuery, enumerate_by_invariants


def test_cache_roundtrip(tmp_path):
    q = EnumQuery(4, -2, 0)
    first = cache.cached_enumerate(q, root=tmp_path)
    path = cache.cache_path(q, tmp_path)
    assert path.exists()
    header = json.loads(path.read_text())["header"]
    assert header == {"chart": "std_X4", "square": -2, "c1": 0, "tool_version": cache.__version__}
    assert cache.cached_enumerate(q, root=tmp_path) == first == enumerate_by_invariants(q)
    assert not [p for p in tmp_path.iterdir() if p.name.startswith(".tmp-")]


def test_stale_or_corrupt_cache_is_ignored(tmp_path):
    q = EnumQuery(3, -1, 1)
    path = cache.cache_path(q, tmp_path)
    tmp_path.mkdir(exist_ok=True)
    path.write_text("{not json")
    assert cache.cached_enumerate(q, root=tmp_path) == enumerate_by_invariants(q)
    doc = json.loads(path.read_text())
    doc["header"]["tool_version"] = "0.0.0"
    doc["classes"] = []
    path.write_text(json.dumps(doc))
    assert cache.cached_enumerate(q, root=tmp_path) == enumerate_by_invariants(q)


def test_env_var_sets_default(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path / "x"))
    assert cache.default_cache_dir() == tmp_path / "x"

import pytest

from sscode.errors import BadParams, RegistryMiss
from sscode.registry import EXTERNAL, Entry, Registry, parse_registry_file, registry_default


def test_external_constants_win_lookup():
    reg = registry_default()
    e = reg.lookup(2, 11, 2, 3)
    assert e.size == 76331 and e.provenance == EXTERNAL
    # a builder can do better, and best() reports it
    assert reg.best(2, 11, 2, 3).size >= 76331


def test_builder_values():
    reg = registry_default()
    assert reg.lookup(2, 13, 3, 4).size == 2**18 + 4747
    assert reg.lookup(2, 12, 2, 4).size == 2**24 + 2871296
    assert reg.lookup(2, 8, 1, 3).size == 97155  # whole Grassmannian
    assert reg.lookup(2, 6, 4, 3).size == 1  # distance too large
    names = {c.builder for c in reg.candidates(2, 11, 2, 3)}
    assert {"pending-dots", "lifted-mrd", "multicomponent"} <= names


@pytest.mark.parametrize("key", [(2, 6, 2, 4), (2, 11, 2, 3), (2, 11, 2, 2), (2, 13, 3, 4), (2, 7, 2, 5)])
def test_build_reproduces_registered_size(key):
    reg = registry_default()
    q, n, d, k = key
    code = reg.build(q, n, d, k)
    assert code.size == reg.lookup(q, n, d, k).size
    assert (code.n, code.k) == (n, k) and code.d >= d


def test_external_without_builder():
    with pytest.raises(RegistryMiss):
        registry_default().build(2, 8, 2, 4)


def test_empty_registry_without_builders():
    reg = Registry(use_builders=False)
    with pytest.raises(RegistryMiss):
        reg.lookup(2, 8, 2, 4)
    reg.add(Entry(2, 8, 2, 4, 99, "test"))
    assert reg.size(2, 8, 2, 4) == 99


def test_reported_values():
    assert Registry.reported("multilevel", (2, 13, 3, 4)) == 2**18 + 4357
    with pytest.raises(RegistryMiss):
        Registry.reported("multilevel", (2, 99, 3, 4))


def test_registry_file_and_env(tmp_path, monkeypatch):
    p = tmp_path / "extra.txt"
    p.write_text("# q n d k size provenance\n2 9 3 4 300 my table\n")
    entries = parse_registry_file(str(p))
    assert entries == [Entry(2, 9, 3, 4, 300, "my table")]
    monkeypatch.setenv("SSCODE_REGISTRY", str(p))
    assert registry_default().lookup(2, 9, 3, 4).size == 300
    p.write_text("2 9 3\n")
    with pytest.raises(BadParams):
        parse_registry_file(str(p))


def test_field_filter():
    assert all(e.q == 3 for e in registry_default(3).entries())

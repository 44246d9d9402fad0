import json

import pytest

from core.data import DEFAULT_REGISTRY_PATH, Registry, RegistryError, get_registry, set_registry


def _write_copy(tmp_path, mutate=None, name="registry.json"):
    data = json.loads(DEFAULT_REGISTRY_PATH.read_text(encoding="utf-8"))
    if mutate is not None:
        mutate(data)
    target = tmp_path / name
    target.write_text(json.dumps(data, ensure_ascii=False), encoding="utf-8")
    return target, data


def test_default_registry(registry):
    assert registry.path == DEFAULT_REGISTRY_PATH
    assert len(registry.forbidden_table()) == 13
    assert len(registry.allowed_table()) == 7
    assert set(registry.list_presets()) == {"lf4", "lf3p"}
    assert {"c_inf", "C_inf", "f", "sigma"} <= set(registry.list_constants())
    assert registry.get_alphabet("pairs") == ["1_2", "2_2"]
    assert registry.get_preset("missing") is None


def test_limits(registry):
    assert registry.limit("sandwich_high") == "3.1181201786"
    with pytest.raises(KeyError):
        registry.limit("nope")


def test_tables_are_copies(registry):
    registry.forbidden_table().clear()
    assert len(registry.forbidden_table()) == 13


def test_missing_file(tmp_path):
    with pytest.raises(RegistryError):
        Registry(tmp_path / "absent.json")


def test_missing_section(tmp_path):
    path, _ = _write_copy(tmp_path, lambda data: data.pop("presets"))
    with pytest.raises(RegistryError, match="presets"):
        Registry(path)


def test_singleton_and_override(tmp_path):
    path, _ = _write_copy(tmp_path, lambda data: data["limits"].update(sandwich_high="3.2"))
    assert get_registry() is get_registry()
    set_registry(Registry(path))
    assert get_registry().limit("sandwich_high") == "3.2"


def test_environment_variable(tmp_path, monkeypatch):
    path, _ = _write_copy(tmp_path)
    monkeypatch.setenv("MSL_REGISTRY", str(path))
    set_registry(None)
    assert get_registry().path == path


def test_yaml_registry(tmp_path):
    yaml = pytest.importorskip("yaml")
    data = json.loads(DEFAULT_REGISTRY_PATH.read_text(encoding="utf-8"))
    target = tmp_path / "registry.yaml"
    target.write_text(yaml.safe_dump(data, allow_unicode=True, sort_keys=False), encoding="utf-8")
    loaded = Registry(target)
    assert loaded.list_presets() == Registry().list_presets()
    assert loaded.list_constants() == Registry().list_constants()

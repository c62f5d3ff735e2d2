import pytest

from gxinduce.catalog import entry_path, get_entry, list_entries, self_test
from gxinduce.catalog import build


def test_list_entries():
    assert list_entries() == ["ising_crossed", "toric_z2", "vec_z2"]


def test_unknown_entry():
    with pytest.raises(KeyError):
        entry_path("toric_z3")
    with pytest.raises(KeyError):
        get_entry("toric_z3")


@pytest.mark.parametrize("name", ["vec_z2", "toric_z2", "ising_crossed"])
def test_self_test_exact(name):
    e = get_entry(name)
    assert e.self_test.passed, e.self_test.summary()
    assert e.expected["rank"] == len(e.cat.labels)


@pytest.mark.parametrize("name", ["vec_z2", "toric_z2", "ising_crossed"])
def test_self_test_approx(name):
    e = get_entry(name, approx=True)
    assert e.self_test.passed, e.self_test.summary()


@pytest.mark.parametrize("name", sorted(build.BUILDERS))
def test_builders_reproduce_files(name):
    assert build.render(name) == entry_path(name).read_text(encoding="utf-8")


def test_self_test_catches_wrong_table():
    inst = build.build_toric_z2()
    inst.expected["settings"]["condensed"]["sectors"]["g"]["count"] = 2
    rep = self_test(inst)
    assert not rep["condensed.sectors.g"].passed


def test_default_setting_is_condensed():
    assert get_entry("toric_z2").instance.setting().name == "condensed"

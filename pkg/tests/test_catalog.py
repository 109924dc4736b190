import pytest

import gquot as gq
from gquot.catalog import (
    GROUP_SPECS,
    build_cocycle,
    build_group,
    cocycle_names,
    load_cocycle,
    load_group,
    resolve_cocycle,
    resolve_group,
    write_catalog,
)
from gquot.cocycles import bicharacter_of
from gquot.errors import ValidationError


def test_catalog_groups_load_bit_exact():
    for name in GROUP_SPECS:
        assert load_group(name) == build_group(name)


def test_catalog_cocycles_are_nondegenerate():
    for name in cocycle_names():
        carrier, table = load_cocycle(name)
        assert table == build_cocycle(name)[1]
        assert table.group == build_group(carrier)
        assert bicharacter_of(table).radical().order == 1


def test_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("GQ_CATALOG_DIR", str(tmp_path))
    target = write_catalog()
    assert target == tmp_path
    assert (tmp_path / "group_C4.txt").exists()
    assert load_group("C4") == gq.cyclic(4)


def test_resolvers(tmp_path):
    assert resolve_group("D4") == gq.dihedral(4)
    G = gq.make_group("C2xC2")
    assert resolve_cocycle("trivial", G).is_trivial_table()
    assert resolve_cocycle("nd_C2xC2", G).group == G
    with pytest.raises(ValidationError):
        resolve_cocycle("nd_C2xC2", gq.cyclic(4))
    with pytest.raises(ValidationError):
        resolve_cocycle("nonsense", G)
    with pytest.raises(ValidationError):
        build_group("C99")

import os

import pytest

from canonvec.core.engine import UnknownGroupError, build_config, resolve_group
from canonvec.core.errors import ConfigError
from canonvec.core.tree import Mode


def test_resolve_catalog_names():
    assert resolve_group("dihedral5").order() == 10
    assert resolve_group(" pairs4 ").degree == 6
    assert resolve_group("frobenius20").order() == 20
    assert resolve_group("cyclic5") is resolve_group("cyclic5")
    with pytest.raises(UnknownGroupError):
        resolve_group("nosuchgroup")
    with pytest.raises(UnknownGroupError):
        resolve_group("pairs1")


def test_edited_group_file_is_read_again(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text("degree 4\n(1,2,3,4)\n")
    assert resolve_group(str(path)).order() == 4
    assert resolve_group(str(path)).name == "square"

    path.write_text("degree 4\n(1,2,3,4)\n(1,2)\n")
    stamp = path.stat().st_mtime_ns + 1_000_000_000
    os.utime(path, ns=(stamp, stamp))
    assert resolve_group(str(path)).order() == 24


def test_build_config():
    c3 = resolve_group("cyclic3")
    assert build_config(c3, degree=2).mode is Mode.BY_DEGREE
    assert build_config(c3, max_degree=2).mode is Mode.UP_TO_DEGREE
    assert build_config(c3, max_part=1).mode is Mode.ALL
    assert build_config(c3, staircase=True).ceiling == (2, 1, 0)
    with pytest.raises(ConfigError):
        build_config(c3, degree=1, max_degree=2)
    with pytest.raises(ConfigError):
        build_config(c3, staircase=True, max_part=1)
    with pytest.raises(ConfigError):
        build_config(c3)

import os
import tempfile
from pathlib import Path

import pytest

# the web module opens its history database at import time
os.environ.setdefault("CANONVEC_HISTORY_DB", str(Path(tempfile.mkdtemp()) / "history.db"))

from canonvec.core import catalog


def bundled_groups(max_degree):
    groups = []
    for n in range(1, max_degree + 1):
        groups += [catalog.trivial(n), catalog.cyclic(n), catalog.dihedral(n), catalog.symmetric(n)]
        if n >= 3:
            groups.append(catalog.alternating(n))
    if max_degree >= 5:
        groups.append(catalog.frobenius_20())
    return groups


@pytest.fixture
def history_path(tmp_path, monkeypatch):
    path = tmp_path / "runs.db"
    monkeypatch.setenv("CANONVEC_HISTORY_DB", str(path))
    return path

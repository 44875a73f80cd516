import json

import pytest

from canonvec.core.history import RunHistoryDB
from canonvec.web import app as app_module


@pytest.fixture
def client(tmp_path, monkeypatch):
    monkeypatch.setattr(app_module, "history_db", RunHistoryDB(tmp_path / "web.db"))
    app_module.app.config["TESTING"] = True
    with app_module.app.test_client() as client:
        yield client


def test_home(client):
    assert "/count" in client.get("/").get_json()["endpoints"]


def test_count_records_history(client):
    res = client.post("/count", json={"group": "symmetric5", "staircase": True})
    assert res.status_code == 200
    body = res.get_json()
    assert body["count"] == 41
    assert body["history"][0]["group"] == "symmetric5"
    assert body["history"][0]["result"] == 41


def test_enumerate_with_stats(client):
    res = client.post("/enumerate", json={"group": "cyclic3", "max_degree": 3, "stats": True})
    body = res.get_json()
    assert len(body["vectors"]) == 8
    assert body["vectors"][5] == [2, 1, 0]
    assert body["stats"]["tests"] == 12
    assert body["history"][0]["stats"]["canonicals"] == 8


def test_canonical(client):
    res = client.post("/canonical", json={"group": "cyclic3", "vectors": [[0, 1, 0], [1, 1, 0]]})
    assert res.get_json() == {"results": [False, True]}
    res = client.post("/canonical", json={"group": "cyclic3", "vectors": [[1, 0]]})
    assert res.status_code == 400


def test_graphs(client):
    assert client.post("/graphs", json={"nodes": 4}).get_json() == {"count": 11}
    assert client.post("/graphs", json={"nodes": -1}).status_code == 400


def test_bad_requests(client):
    res = client.post("/count", json={})
    assert res.status_code == 400
    assert res.get_json()["error"] == "Missing group"
    res = client.post("/count", json={"group": "cyclic3"})
    assert res.status_code == 400
    assert "nothing bounds" in res.get_json()["error"]
    assert client.post("/enumerate", json={"group": "nosuch"}).status_code == 400


def test_history_endpoint(client):
    client.post("/count", json={"group": "cyclic3", "max_part": 1})
    client.post("/count", json={"group": "cyclic4", "max_part": 1})
    rows = client.get("/history?limit=1").get_json()["history"]
    assert [r["group"] for r in rows] == ["cyclic4"]


def test_history_export_import_and_trim(tmp_path, monkeypatch):
    db = RunHistoryDB(tmp_path / "a.db")
    for k in range(3):
        db.log_run("count", f"cyclic{k + 2}", k, {"canonicals": k})
    target = tmp_path / "runs.json"
    assert db.export_to_json(target) == 3
    assert [e["group"] for e in json.loads(target.read_text())] == ["cyclic4", "cyclic3", "cyclic2"]

    copy = RunHistoryDB(tmp_path / "b.db")
    assert copy.import_from_json(target) == 3
    assert [RunHistoryDB.as_dict(r)["group"] for r in copy.list_all()] == ["cyclic4", "cyclic3", "cyclic2"]
    assert RunHistoryDB.as_dict(copy.get_recent(1)[0])["stats"] == {"canonicals": 2}

    monkeypatch.setenv("CANONVEC_MAX_HISTORY", "2")
    db.log_run("count", "cyclic5", 9)
    assert [r[1] for r in db.list_all()] == ["cyclic5", "cyclic4"]

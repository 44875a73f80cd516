# app.py
from flask import Flask, request, jsonify
from flask_cors import CORS
from canonvec.core.canonical import is_canonical
from canonvec.core.engine import build_config, resolve_group
from canonvec.core.errors import CanonvecError
from canonvec.core.graphs import count_unlabeled_graphs
from canonvec.core.history import RunHistoryDB
from canonvec.core.parser import ParseError
from canonvec.core.permutation import check_vector
from canonvec.core.tree import EnumStats, count_canonicals, enumerate_canonicals

app = Flask(__name__)
CORS(app)

history_db = RunHistoryDB()


def _recent():
    return [RunHistoryDB.as_dict(r) for r in history_db.get_recent(50)]


def _config_from(data):
    group = resolve_group(data["group"])
    return build_config(
        group,
        degree=data.get("degree"),
        max_degree=data.get("max_degree"),
        max_part=data.get("max_part"),
        staircase=bool(data.get("staircase", False)),
    )


@app.errorhandler(CanonvecError)
def bad_input(exc):
    return jsonify({"error": str(exc)}), 400


@app.route("/")
def home():
    return jsonify({"endpoints": ["/count", "/enumerate", "/canonical", "/graphs", "/history"]})


@app.route("/count", methods=["POST"])
def count():
    data = request.get_json(silent=True) or {}
    if not data.get("group"):
        return jsonify({"error": "Missing group"}), 400
    config = _config_from(data)
    total = count_canonicals(config)
    history_db.log_run("count", data["group"], total)
    return jsonify({"count": total, "history": _recent()})


@app.route("/enumerate", methods=["POST"])
def enumerate_vectors():
    data = request.get_json(silent=True) or {}
    if not data.get("group"):
        return jsonify({"error": "Missing group"}), 400
    config = _config_from(data)
    stats = EnumStats(config.group.degree, config.group.order()) if data.get("stats") else None
    vectors = [list(v) for v in enumerate_canonicals(config, stats)]
    history_db.log_run("enumerate", data["group"], len(vectors), stats.to_dict() if stats else None)
    body = {"vectors": vectors, "history": _recent()}
    if stats is not None:
        body["stats"] = stats.to_dict()
    return jsonify(body)


@app.route("/canonical", methods=["POST"])
def canonical():
    data = request.get_json(silent=True) or {}
    vectors = data.get("vectors")
    if not data.get("group") or not isinstance(vectors, list):
        return jsonify({"error": "Missing group or vectors"}), 400
    group = resolve_group(data["group"])
    try:
        results = [is_canonical(check_vector(v), group) for v in vectors]
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc
    return jsonify({"results": results})


@app.route("/graphs", methods=["POST"])
def graphs():
    data = request.get_json(silent=True) or {}
    nodes = data.get("nodes")
    if not isinstance(nodes, int) or nodes < 0:
        return jsonify({"error": "Missing or invalid nodes"}), 400
    total = count_unlabeled_graphs(nodes)
    history_db.log_run("graphs", f"pairs{nodes}", total)
    return jsonify({"count": total})


@app.route("/history", methods=["GET"])
def history():
    limit = request.args.get("limit", default=20, type=int)
    return jsonify({"history": [RunHistoryDB.as_dict(r) for r in history_db.get_recent(limit)]})


if __name__ == "__main__":
    app.run(port=8000, debug=True)

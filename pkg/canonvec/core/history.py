import sqlite3, json
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from canonvec import config


class RunHistoryDB:
    """SQLite-backed ledger of enumeration, count and benchmark runs."""

    def __init__(self, db_path: Optional[Path] = None):
        self.db_path = Path(db_path) if db_path is not None else config.history_db_path()
        self._init_db()

    def _init_db(self):
        with sqlite3.connect(self.db_path) as conn:
            conn.execute("""
                CREATE TABLE IF NOT EXISTS run_logs (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    command TEXT NOT NULL,
                    group_name TEXT NOT NULL,
                    timestamp TEXT NOT NULL,
                    result INTEGER,
                    stats TEXT
                );
            """)

    def _trim(self, conn: sqlite3.Connection):
        conn.execute("""
            DELETE FROM run_logs WHERE id NOT IN (
                SELECT id FROM run_logs ORDER BY id DESC LIMIT ?
            );
        """, (config.max_history(),))

    def log_run(self, command: str, group_name: str, result: int, stats: Optional[Dict] = None):
        with sqlite3.connect(self.db_path) as conn:
            conn.execute(
                "INSERT INTO run_logs (command, group_name, timestamp, result, stats) VALUES (?, ?, ?, ?, ?)",
                (command, group_name, datetime.now(timezone.utc).isoformat(), result, json.dumps(stats or {})),
            )
            self._trim(conn)
            conn.commit()

    def get_recent(self, limit: int = 5) -> List[Tuple]:
        with sqlite3.connect(self.db_path) as conn:
            return conn.execute(
                "SELECT command, group_name, timestamp, result, stats FROM run_logs ORDER BY id DESC LIMIT ?",
                (limit,),
            ).fetchall()

    def list_all(self) -> List[Tuple]:
        with sqlite3.connect(self.db_path) as conn:
            return conn.execute(
                "SELECT command, group_name, timestamp, result, stats FROM run_logs ORDER BY id DESC"
            ).fetchall()

    @staticmethod
    def as_dict(row: Tuple) -> Dict:
        return {
            "command": row[0],
            "group": row[1],
            "timestamp": row[2],
            "result": row[3],
            "stats": json.loads(row[4]) if row[4] else {},
        }

    def export_to_json(self, file_path: Path) -> int:
        data = [self.as_dict(r) for r in self.list_all()]
        Path(file_path).write_text(json.dumps(data, indent=2), encoding="utf-8")
        return len(data)

    def import_from_json(self, file_path: Path) -> int:
        data = json.loads(Path(file_path).read_text(encoding="utf-8"))
        with sqlite3.connect(self.db_path) as conn:
            # oldest first, so ids keep the original order
            for entry in reversed(data):
                ts = entry.get("timestamp") or datetime.now(timezone.utc).isoformat()
                conn.execute(
                    "INSERT INTO run_logs (command, group_name, timestamp, result, stats) VALUES (?, ?, ?, ?, ?)",
                    (entry["command"], entry["group"], ts, entry.get("result"), json.dumps(entry.get("stats", {}))),
                )
            self._trim(conn)
            conn.commit()
        return len(data)

"""Staircase benchmark: statistics of the canonical enumeration for a set of groups."""

import csv
import logging
import time
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import IO, Dict, List, Optional, Tuple

from tqdm import tqdm

from .engine import resolve_group
from .errors import CanonvecError
from .history import RunHistoryDB
from .tree import collect, staircase_config

logger = logging.getLogger(__name__)

BUILTIN_SETS: Dict[str, List[str]] = {
    "degree5": ["cyclic5", "dihedral5", "frobenius20", "alternating5", "symmetric5"],
}


@dataclass(frozen=True)
class BenchRow:
    group: str
    n: int
    order: int
    index: int
    canonicals: int
    tests: int
    skipped: int
    total_orbit_sizes: int
    total_explored: int
    err: Fraction
    ratio: Fraction
    complexity: Fraction
    wall_ms: float

    def to_dict(self) -> Dict[str, object]:
        out = asdict(self)
        for key in ("err", "ratio", "complexity"):
            q = out[key]
            out[key] = f"{q.numerator}/{q.denominator}"
        out["wall_ms"] = round(self.wall_ms, 3)
        return out


COLUMNS = [f.name for f in fields(BenchRow)]


def load_group_set(source: str) -> List[str]:
    """A builtin set name, or a file with one catalog name or group-file path per line."""
    if source in BUILTIN_SETS:
        return list(BUILTIN_SETS[source])
    lines = Path(source).read_text(encoding="utf-8").splitlines()
    return [line.strip() for line in lines if line.strip() and not line.strip().startswith("#")]


def bench_group(source: str) -> BenchRow:
    group = resolve_group(source)
    start = time.perf_counter()
    _, stats = collect(staircase_config(group))
    wall_ms = (time.perf_counter() - start) * 1000
    n, order = group.degree, group.order()
    return BenchRow(
        group=group.name or source,
        n=n,
        order=order,
        index=factorial(n) // order,
        canonicals=stats.canonicals,
        tests=stats.tests,
        skipped=stats.skipped,
        total_orbit_sizes=stats.total_orbit_sizes,
        total_explored=stats.total_explored,
        err=stats.err,
        ratio=stats.ratio,
        complexity=stats.complexity,
        wall_ms=wall_ms,
    )


def run_staircase_benchmark(
    sources: List[str],
    history: Optional[RunHistoryDB] = None,
    progress: bool = False,
) -> Tuple[List[BenchRow], List[Tuple[str, str]]]:
    """
    One row per group source. A group that fails is reported in the second
    list as (source, message) and the remaining groups still run.
    """
    rows, failures = [], []
    for source in tqdm(sources, desc="staircase", unit="group", disable=not progress):
        try:
            row = bench_group(source)
        except (CanonvecError, OSError) as exc:
            logger.error("benchmark of %s failed: %s", source, exc)
            failures.append((source, str(exc)))
            continue
        rows.append(row)
        if history is not None:
            history.log_run("bench", row.group, row.canonicals, row.to_dict())
    return rows, failures


def write_csv(rows: List[BenchRow], stream: IO[str]):
    writer = csv.DictWriter(stream, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.to_dict())

# benchmark.py
import tempfile
import time
import tracemalloc
from pathlib import Path

from canonvec.core import catalog
from canonvec.core.bench import run_staircase_benchmark
from canonvec.core.graphs import count_unlabeled_graphs
from canonvec.core.history import RunHistoryDB
from canonvec.core.tree import GenerationConfig, Mode, count_canonicals


# ----------------------
# Staircase Benchmark
# ----------------------
print("=== Staircase Benchmark (degree 5) ===")
tracemalloc.start()
start = time.time()
rows, failures = run_staircase_benchmark(["cyclic5", "dihedral5", "frobenius20", "alternating5", "symmetric5"])
end = time.time()
mem_current, mem_peak = tracemalloc.get_traced_memory()
tracemalloc.stop()
for row in rows:
    print(f"{row.group:<14} canonicals={row.canonicals} tests={row.tests} complexity={float(row.complexity):.2f}")
print(f"Time: {end - start:.2f}s, Current Mem: {mem_current/1e6:.2f}MB, Peak Mem: {mem_peak/1e6:.2f}MB")

# ----------------------
# Unlabeled Graphs Benchmark
# ----------------------
print("\n=== Unlabeled Graphs Benchmark ===")
for n in range(4, 8):
    start = time.time()
    total = count_unlabeled_graphs(n)
    end = time.time()
    print(f"{n} nodes: {total} graphs in {end - start:.2f}s")

# ----------------------
# Larger group, sequential vs pool
# ----------------------
print("\n=== Parallel Enumeration Benchmark ===")
config = GenerationConfig(catalog.cyclic(8), Mode.ALL, max_part=2)
for jobs in (1, 4):
    start = time.time()
    total = count_canonicals(config, jobs=jobs)
    end = time.time()
    print(f"jobs={jobs}: {total} vectors in {end - start:.2f}s")

# ----------------------
# History DB Benchmark
# ----------------------
print("\n=== History DB Benchmark ===")
db = RunHistoryDB(Path(tempfile.mkdtemp()) / "bench.db")
start = time.time()
for i in range(1000):
    db.log_run("count", f"cyclic{i % 9 + 1}", i, {"canonicals": i})
end = time.time()
print(f"Logged 1000 runs in {end - start:.2f}s")

start = time.time()
recent = db.get_recent(50)
end = time.time()
print(f"Retrieved {len(recent)} recent runs in {end - start:.2f}s")

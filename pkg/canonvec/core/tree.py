import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import groupby
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import ConfigError, ErrorBoundViolation
from .group import PermutationGroup, orbit_of_vector
from .permutation import Vector

logger = logging.getLogger(__name__)


class Mode(Enum):
    BY_DEGREE = "by-degree"
    UP_TO_DEGREE = "up-to-degree"
    ALL = "all"


class Strategy(Enum):
    BFS = "bfs"
    DFS = "dfs"


# --------------------------
# Tree structure
# --------------------------

def _last_nonzero(v: Vector) -> int:
    for i in range(len(v) - 1, -1, -1):
        if v[i]:
            return i
    return -1


def father(v: Vector) -> Vector:
    """Decrement the last non-zero entry."""
    i = _last_nonzero(v)
    if i < 0:
        raise ValueError("the zero vector is the root and has no father")
    return v[:i] + (v[i] - 1,) + v[i + 1:]


def _indexed_children(v: Vector) -> Iterator[Tuple[int, Vector]]:
    """(position, child) pairs: the increment child first, then the unit extensions left to right."""
    i = max(_last_nonzero(v), 0)
    yield i, v[:i] + (v[i] + 1,) + v[i + 1:]
    for j in range(i + 1, len(v)):
        yield j, v[:j] + (1,) + v[j + 1:]


def children(v: Vector) -> List[Vector]:
    return [child for _, child in _indexed_children(tuple(v))]


# --------------------------
# Configuration
# --------------------------

@dataclass(frozen=True)
class GenerationConfig:
    """
    What to enumerate.

    Attributes:
        group (PermutationGroup): the acting group; vectors have its degree.
        mode (Mode): one degree, every degree up to a bound, or everything in the box.
        degree (Optional[int]): the degree (BY_DEGREE) or the degree cap (UP_TO_DEGREE).
        max_part (Optional[int]): bound applied to every entry.
        ceiling (Optional[Vector]): componentwise upper bounds.
        strategy (Strategy): breadth-first or depth-first traversal.
    """
    group: PermutationGroup
    mode: Mode = Mode.UP_TO_DEGREE
    degree: Optional[int] = None
    max_part: Optional[int] = None
    ceiling: Optional[Vector] = None
    strategy: Strategy = Strategy.BFS

    def __post_init__(self):
        if self.mode in (Mode.BY_DEGREE, Mode.UP_TO_DEGREE):
            if self.degree is None or self.degree < 0:
                raise ConfigError(f"mode {self.mode.value} needs a non-negative degree, got {self.degree}")
        elif self.max_part is None and self.ceiling is None:
            raise ConfigError("enumerating all vectors needs a max_part or a ceiling")
        if self.max_part is not None and self.max_part < 0:
            raise ConfigError(f"max_part must be non-negative, got {self.max_part}")
        if self.ceiling is not None:
            if len(self.ceiling) != self.group.degree:
                raise ConfigError(f"ceiling has {len(self.ceiling)} entries for a group of degree {self.group.degree}")
            if any(c < 0 for c in self.ceiling):
                raise ConfigError(f"ceiling {self.ceiling} has negative entries")

    @property
    def degree_cap(self) -> Optional[int]:
        return None if self.mode is Mode.ALL else self.degree

    def wanted(self, d: int) -> bool:
        if self.mode is Mode.BY_DEGREE:
            return d == self.degree
        if self.mode is Mode.UP_TO_DEGREE:
            return d <= self.degree
        return True

    def allows(self, position: int, value: int) -> bool:
        if self.max_part is not None and value > self.max_part:
            return False
        return self.ceiling is None or value <= self.ceiling[position]

    def children(self, v: Vector) -> Iterator[Vector]:
        """Children of v meeting max_part and ceiling (only the changed entry needs checking)."""
        for position, child in _indexed_children(v):
            if self.allows(position, child[position]):
                yield child


def staircase_config(group: PermutationGroup, strategy: Strategy = Strategy.BFS) -> GenerationConfig:
    """
    Vectors under the staircase: v_i <= n-i componentwise, strictly below (n-1, ..., 1, 0).

    The degree cap n(n-1)/2 - 1 removes exactly the staircase vector itself,
    the only vector of the box with top degree.
    """
    n = group.degree
    ceiling = tuple(range(n - 1, -1, -1))
    cap = max(n * (n - 1) // 2 - 1, 0)
    return GenerationConfig(group, Mode.UP_TO_DEGREE, degree=cap, ceiling=ceiling, strategy=strategy)


# --------------------------
# Statistics
# --------------------------

@dataclass
class EnumStats:
    """
    Counters filled during an enumeration run.

    Attributes:
        n (int): group degree.
        group_order (int): |G|.
        canonicals_by_degree (Dict[int, int]): tested canonical vectors per degree.
        tests (int): canonicity tests performed, the root included.
        non_canonical (int): tests that answered False.
        skipped (int): descendants of non-canonical vectors, never tested.
        total_orbit_sizes (int): sum of the orbit sizes of every tested vector.
        total_explored (int): sum of the explored counts of the tests answering True.
        total_explored_rejected (int): the same for the tests answering False.
        total_retained (int): sum of the todo-set sizes of every test.
        max_degree (int): largest tested degree.
    """
    n: int
    group_order: int
    canonicals_by_degree: Dict[int, int] = field(default_factory=dict)
    tests: int = 0
    non_canonical: int = 0
    skipped: int = 0
    total_orbit_sizes: int = 0
    total_explored: int = 0
    total_explored_rejected: int = 0
    total_retained: int = 0
    max_degree: int = 0

    @property
    def canonicals(self) -> int:
        return sum(self.canonicals_by_degree.values())

    @property
    def err(self) -> Fraction:
        return Fraction(self.tests - self.canonicals, self.canonicals)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.total_explored, self.total_orbit_sizes)

    @property
    def complexity(self) -> Fraction:
        return Fraction(self.total_explored, self.canonicals)

    def record(self, degree: int, canonical: bool, explored: int, retained: int, orbit_size: int):
        self.tests += 1
        self.total_retained += retained
        self.total_orbit_sizes += orbit_size
        self.max_degree = max(self.max_degree, degree)
        if canonical:
            self.canonicals_by_degree[degree] = self.canonicals_by_degree.get(degree, 0) + 1
            self.total_explored += explored
        else:
            self.non_canonical += 1
            self.total_explored_rejected += explored

    def error_bound(self) -> Fraction:
        """min{ n(|G|-1)/(n+d), n-1 } with d the largest tested degree."""
        n, d = self.n, self.max_degree
        return min(Fraction(n * (self.group_order - 1), n + d), Fraction(max(n - 1, 0)))

    def check_error_bound(self, strict: bool = False) -> bool:
        if self.err <= self.error_bound():
            return True
        message = f"relative error {self.err} exceeds the bound {self.error_bound()}"
        if strict:
            raise ErrorBoundViolation(message)
        logger.warning(message)
        return False

    def to_dict(self) -> Dict[str, object]:
        return {
            "canonicals": self.canonicals,
            "tests": self.tests,
            "skipped": self.skipped,
            "total_orbit_sizes": self.total_orbit_sizes,
            "total_explored": self.total_explored,
            "total_retained": self.total_retained,
            "err": _fraction_text(self.err),
            "ratio": _fraction_text(self.ratio),
            "complexity": _fraction_text(self.complexity),
        }


def _fraction_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


# --------------------------
# Enumeration
# --------------------------

class _Walker:
    """One traversal of the tree, testing nodes and optionally keeping statistics."""

    def __init__(self, config: GenerationConfig, stats: Optional[EnumStats] = None):
        self.config = config
        self.group = config.group
        self.tester = config.group.canonical_tester
        self.stats = stats

    def test(self, v: Vector, degree: int) -> bool:
        if self.stats is None:
            return self.tester.is_canonical(v)
        outcome = self.tester.test(v)
        self.stats.record(
            degree, outcome.canonical, outcome.explored, outcome.retained, len(orbit_of_vector(self.group, v))
        )
        if not outcome.canonical:
            self.stats.skipped += self._pruned_descendants(v, degree)
        return outcome.canonical

    def _pruned_descendants(self, v: Vector, degree: int) -> int:
        """Descendants of a rejected vector that meet the constraints, walked without testing."""
        cap = self.config.degree_cap
        count = 0
        stack = [(v, degree)]
        while stack:
            w, d = stack.pop()
            if cap is not None and d >= cap:
                continue
            for child in self.config.children(w):
                count += 1
                stack.append((child, d + 1))
        return count

    def bfs(self, root: Vector) -> Iterator[Vector]:
        """Level by level; only the canonical vectors of the previous degree are kept."""
        config = self.config
        cap = config.degree_cap
        d = sum(root)
        level = [root]
        if config.wanted(d):
            yield root
        while level and (cap is None or d < cap):
            d += 1
            nxt = [child for v in level for child in config.children(v) if self.test(child, d)]
            logger.debug("degree %d: %d canonical vectors", d, len(nxt))
            if config.wanted(d):
                yield from nxt
            level = nxt

    def dfs(self, root: Vector) -> Iterator[Vector]:
        """Preorder, children visited in generation order."""
        config = self.config
        cap = config.degree_cap
        stack = [(root, sum(root))]
        while stack:
            v, d = stack.pop()
            if config.wanted(d):
                yield v
            if cap is not None and d >= cap:
                continue
            kept = [child for child in config.children(v) if self.test(child, d + 1)]
            stack.extend((child, d + 1) for child in reversed(kept))

    def walk(self, root: Vector) -> Iterator[Vector]:
        if self.config.strategy is Strategy.DFS:
            return self.dfs(root)
        return self.bfs(root)


def _subtree(config: GenerationConfig, root: Vector) -> List[Vector]:
    """Wanted canonical descendants of a canonical root, the root excluded (worker entry point)."""
    walker = _Walker(config)
    return [v for v in walker.dfs(root) if v != root]


def _merge_key(v: Vector) -> Tuple[int, Tuple[int, ...]]:
    return sum(v), tuple(-x for x in v)


def _parallel(config: GenerationConfig, jobs: int) -> Iterator[Vector]:
    """
    Expand the canonical frontier breadth-first until it is wide enough, then
    hand each frontier subtree to a worker process. Results are merged by
    (degree, lex-descending).
    """
    walker = _Walker(config)
    cap = config.degree_cap
    root = (0,) * config.group.degree
    found = [root] if config.wanted(0) else []
    level, d = [root], 0
    while level and len(level) < 4 * jobs and (cap is None or d < cap):
        d += 1
        level = [child for v in level for child in config.children(v) if walker.test(child, d)]
        if config.wanted(d):
            found.extend(level)
    if level and (cap is None or d < cap):
        logger.info("parallel enumeration: %d subtrees over %d workers", len(level), jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_subtree, [config] * len(level), level):
                found.extend(part)
    found.sort(key=_merge_key)
    yield from found


def enumerate_canonicals(
    config: GenerationConfig,
    stats: Optional[EnumStats] = None,
    jobs: int = 1,
    strict: bool = False,
) -> Iterator[Vector]:
    """
    Lazily yield one representative (the lexicographic maximum) per orbit
    meeting the constraints of `config`.

    Children of a non-canonical vector are never tested. Children violating
    max_part or the ceiling are dropped before testing. When `stats` is given
    it is filled as the stream is consumed and the relative-error bound is
    checked once the stream is exhausted.
    """
    if jobs < 1:
        raise ConfigError(f"jobs must be at least 1, got {jobs}")
    if jobs > 1:
        if stats is not None:
            raise ConfigError("statistics runs are sequential; use jobs=1")
        yield from _parallel(config, jobs)
        return
    walker = _Walker(config, stats)
    root = (0,) * config.group.degree
    if stats is not None:
        walker.test(root, 0)
    yield from walker.walk(root)
    if stats is not None:
        stats.check_error_bound(strict)


def count_canonicals(config: GenerationConfig, jobs: int = 1) -> int:
    return sum(1 for _ in enumerate_canonicals(config, jobs=jobs))


def collect(config: GenerationConfig, strict: bool = True) -> Tuple[List[Vector], EnumStats]:
    """Run a full enumeration with statistics; a relative error above the bound raises by default."""
    stats = EnumStats(config.group.degree, config.group.order())
    vectors = list(enumerate_canonicals(config, stats, strict=strict))
    return vectors, stats


def iter_by_degree(config: GenerationConfig) -> Iterator[Tuple[int, List[Vector]]]:
    """(degree, canonical vectors of that degree) pairs, degrees increasing."""
    ordered = enumerate_canonicals(config)
    if config.strategy is Strategy.DFS:
        ordered = iter(sorted(ordered, key=_merge_key))
    for d, vectors in groupby(ordered, key=sum):
        yield d, list(vectors)

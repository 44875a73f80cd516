import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import permutations, product
from math import factorial, prod
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from canonvec import config
from .errors import CostBoundExceeded, DegreeMismatchError
from .permutation import Permutation, Vector, act, compose, identity, pullback_getter

logger = logging.getLogger(__name__)


# --------------------------
# Stabilizer chain
# --------------------------

@dataclass(frozen=True)
class Level:
    """
    One level of the chain: coset representatives of G_{i-1} / G_i.

    Attributes:
        point (int): the base point moved at this level (0-based, equal to the level index).
        representatives (Tuple[Permutation, ...]): identity first, then BFS order.
        by_image (Dict[int, Permutation]): representative u with u(point) == key.
    """
    point: int
    representatives: Tuple[Permutation, ...]
    by_image: Dict[int, Permutation] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.representatives)


@dataclass(frozen=True)
class StrongGeneratingSet:
    """
    Transversals T_1..T_n relative to the base 1, 2, ..., n in that order.

    Every element of T_i fixes 1..i-1 pointwise; the last transversal is
    always {identity}; the product of the transversal sizes is |G|.
    """
    degree: int
    levels: Tuple[Level, ...]
    strong_generators: Tuple[Permutation, ...] = field(compare=False, repr=False)

    @property
    def transversals(self) -> List[Tuple[Permutation, ...]]:
        return [level.representatives for level in self.levels]

    @property
    def base(self) -> Tuple[int, ...]:
        return tuple(range(self.degree))

    def order(self) -> int:
        return prod(len(level) for level in self.levels)

    def sift(self, g: Permutation, start: int = 0) -> Tuple[Permutation, int]:
        """
        Strip g through the levels from `start` on.

        Returns the residue and the level where sifting stopped; the residue is
        the identity and the level is n exactly when g lies in G_start.
        """
        return _sift(self.levels, g, start)

    @cached_property
    def pullbacks(self) -> List[List[Callable[[Vector], Vector]]]:
        """Per level, callables mapping w to act(u^-1, w) for every representative u."""
        return [[pullback_getter(u) for u in level.representatives] for level in self.levels]


def _sift(levels: Sequence[Level], g: Permutation, start: int) -> Tuple[Permutation, int]:
    n = len(levels)
    for i in range(start, n):
        u = levels[i].by_image.get(g.images[i])
        if u is None:
            return g, i
        g = compose(u.inverse(), g)
    return g, n


def _transversal(point: int, gens: Sequence[Permutation], n: int) -> Level:
    """BFS over the generators in input order; u_beta maps `point` to beta."""
    e = identity(n)
    by_image = {point: e}
    reps = [e]
    queue = deque([point])
    while queue:
        beta = queue.popleft()
        u = by_image[beta]
        for s in gens:
            gamma = s.images[beta]
            if gamma not in by_image:
                v = compose(s, u)
                by_image[gamma] = v
                reps.append(v)
                queue.append(gamma)
    return Level(point, tuple(reps), by_image)


def schreier_sims(generators: Sequence[Permutation], n: int) -> StrongGeneratingSet:
    """
    Deterministic Schreier-Sims with the fixed base 0, 1, ..., n-1.

    Levels are completed from the bottom up; whenever a Schreier generator
    does not sift, its residue becomes a new strong generator and the
    computation restarts at the level where the residue got stuck.
    """
    for g in generators:
        if g.degree != n:
            raise DegreeMismatchError(f"generator {g} has degree {g.degree}, expected {n}")
    strong = [g for g in generators if not g.is_identity()]

    def gens_fixing(i: int) -> List[Permutation]:
        return [g for g in strong if all(g.images[j] == j for j in range(i))]

    levels: List[Optional[Level]] = [None] * n
    i = n - 1
    while i >= 0:
        level_gens = gens_fixing(i)
        levels[i] = _transversal(i, level_gens, n)
        stuck = None
        for u in levels[i].representatives:
            for s in level_gens:
                su = compose(s, u)
                schreier = compose(levels[i].by_image[su.images[i]].inverse(), su)
                residue, where = _sift(levels, schreier, i + 1)
                if not residue.is_identity():
                    stuck = (residue, where)
                    break
            if stuck:
                break
        if stuck is None:
            i -= 1
            continue
        residue, where = stuck
        strong.append(residue)
        # the residue fixes 0..where-1; levels deeper than `where` are unaffected
        i = where
    sgs = StrongGeneratingSet(n, tuple(levels), tuple(strong))
    logger.debug("chain built: degree=%d order=%d sizes=%s", n, sgs.order(), [len(l) for l in sgs.levels])
    return sgs


# --------------------------
# Groups
# --------------------------

class PermutationGroup:
    """
    A permutation group given by generators, with a lazily computed chain.

    Instances are treated as immutable once built; the chain is computed at
    most once and may be shared by any number of readers.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), name: Optional[str] = None):
        if degree < 1:
            raise ValueError(f"degree must be positive, got {degree}")
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        for g in self.generators:
            if g.degree != degree:
                raise DegreeMismatchError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.name = name
        self._chain: Optional[StrongGeneratingSet] = None
        self._tester = None

    @property
    def chain(self) -> StrongGeneratingSet:
        if self._chain is None:
            self._chain = schreier_sims(self.generators, self.degree)
        return self._chain

    @property
    def canonical_tester(self):
        """The canonicity tester over this group's chain, built once."""
        if self._tester is None:
            from .canonical import CanonicalTester
            self._tester = CanonicalTester(self.chain)
        return self._tester

    def order(self) -> int:
        return self.chain.order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(f"permutation of degree {p.degree} tested against a group of degree {self.degree}")
        residue, _ = self.chain.sift(p)
        return residue.is_identity()

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def elements(self) -> Iterator[Permutation]:
        """Every element exactly once, as products t_1 * t_2 * ... * t_n of representatives."""
        reps = [level.representatives for level in self.chain.levels if len(level) > 1]
        e = identity(self.degree)
        for choice in product(*reps):
            yield reduce(compose, choice, e)

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def is_symmetric(self) -> bool:
        return self.order() == factorial(self.degree)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermutationGroup) or other.degree != self.degree:
            return False
        return self.order() == other.order() and self.is_subgroup_of(other)

    def __hash__(self) -> int:
        return hash((self.degree, self.order()))

    def __repr__(self) -> str:
        label = self.name or "<" + ", ".join(str(g) for g in self.generators) + ">"
        return f"PermutationGroup({label}, degree={self.degree})"

    def __getstate__(self):
        # chains are rebuilt on demand in other processes
        state = self.__dict__.copy()
        state["_chain"] = None
        state["_tester"] = None
        return state

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Permutation], name: Optional[str] = None) -> "PermutationGroup":
        """Closure of the given elements, keeping only generators that enlarge the group."""
        group = cls(degree, (), name)
        for g in elements:
            if not group.contains(g):
                group = cls(degree, group.generators + (g,), name)
        return group


def group_order(group: PermutationGroup) -> int:
    return group.order()


def contains(group: PermutationGroup, p: Permutation) -> bool:
    return group.contains(p)


def elements(group: PermutationGroup) -> Iterator[Permutation]:
    return group.elements()


# --------------------------
# Orbits and stabilizers
# --------------------------

def orbit_of_vector(group: PermutationGroup, v: Sequence[int]) -> Set[Vector]:
    """The G-orbit of v, by closure under the generators (never by iterating G)."""
    v = tuple(v)
    if len(v) != group.degree:
        raise DegreeMismatchError(f"vector of length {len(v)} for a group of degree {group.degree}")
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for w in frontier:
            for g in group.generators:
                image = act(g, w)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return seen


def symmetric_permutations(n: int) -> Iterator[Permutation]:
    for images in permutations(range(n)):
        yield Permutation(images)


def _full_orbit_size(v: Vector) -> int:
    """Size of the S_n-orbit of v: n! over the product of the multiplicities!."""
    size = factorial(len(v))
    for value in set(v):
        size //= factorial(v.count(value))
    return size


def set_stabilizer_of_orbit(group: PermutationGroup, v: Sequence[int], ambient_n: Optional[int] = None) -> PermutationGroup:
    """
    The subgroup of S_n mapping the G-orbit of v onto itself.

    Brute force over S_n, testing the image of v before the whole orbit.
    An orbit that is already the full S_n-orbit of v is stabilized by S_n.
    """
    n = ambient_n if ambient_n is not None else group.degree
    if n != group.degree:
        raise DegreeMismatchError(f"ambient degree {n} differs from group degree {group.degree}")
    if n > config.brute_force_degree():
        logger.warning("set stabilizer scans %d! permutations (degree bound is %d)", n, config.brute_force_degree())
    orbit = orbit_of_vector(group, v)
    v = tuple(v)
    if len(orbit) == _full_orbit_size(v):
        from .catalog import symmetric
        return symmetric(n)
    ordered = sorted(orbit, reverse=True)

    def stabilizes(tau: Permutation) -> bool:
        if act(tau, v) not in orbit:
            return False
        return all(act(tau, w) in orbit for w in ordered)

    stab = PermutationGroup.from_elements(n, (tau for tau in symmetric_permutations(n) if stabilizes(tau)))
    stab.name = f"Stab(orbit of {','.join(map(str, v))})"
    return stab


def intersection(h1: PermutationGroup, h2: PermutationGroup) -> PermutationGroup:
    """Elements of the smaller group streamed and sifted through the other's chain."""
    if h1.degree != h2.degree:
        raise DegreeMismatchError(f"cannot intersect groups of degree {h1.degree} and {h2.degree}")
    small, large = (h1, h2) if h1.order() <= h2.order() else (h2, h1)
    if small.order() > config.intersection_bound():
        logger.warning("intersection streams %d elements (bound %d)", small.order(), config.intersection_bound())
    if small.is_subgroup_of(large):
        return small
    return PermutationGroup.from_elements(small.degree, (g for g in small.elements() if large.contains(g)))


def subgroup_by_filter(n: int, predicate: Callable[[Permutation], bool]) -> PermutationGroup:
    """The subgroup of S_n made of the permutations satisfying a subgroup-closed predicate."""
    if n > config.brute_force_degree():
        raise CostBoundExceeded(f"degree {n} is above the brute-force bound {config.brute_force_degree()}")
    return PermutationGroup.from_elements(n, (tau for tau in symmetric_permutations(n) if predicate(tau)))
